pub mod dataflow_oracle;
pub mod dense_gnn;
pub mod gradcheck;
pub mod programs;
