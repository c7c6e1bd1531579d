#!/usr/bin/env python3
"""Generate the bundled fixture corpus of small Java-subset classes.

Each repository draws identifiers from its own domain vocabulary plus a
shared pool of generic words, so repositories held out from training carry
words a closed vocabulary never sees. Output is deterministic for a seed.

    python3 scripts/gen_fixtures.py --out crates/gsc/fixtures/corpus
    python3 scripts/gen_fixtures.py --out crates/gsc/fixtures/smoke --repos 2 --files 3 --seed 99
"""

import argparse
import random
import shutil
from pathlib import Path

DOMAINS = {
    "inventory": ["stock", "item", "warehouse", "shelf", "order", "supplier", "crate", "pallet"],
    "banking": ["account", "balance", "deposit", "interest", "loan", "credit", "ledger", "branch"],
    "graphics": ["pixel", "color", "canvas", "brush", "layer", "shade", "sprite", "texture"],
    "network": ["packet", "socket", "route", "latency", "peer", "frame", "channel", "hop"],
    "weather": ["temperature", "humidity", "pressure", "wind", "forecast", "station", "rain", "cloud"],
    "school": ["student", "grade", "course", "teacher", "lesson", "exam", "semester", "credit"],
    "music": ["note", "tempo", "chord", "track", "volume", "beat", "melody", "pitch"],
    "sports": ["player", "team", "goal", "match", "season", "league", "coach", "score"],
    "kitchen": ["recipe", "ingredient", "oven", "portion", "flavor", "spice", "dish", "meal"],
    "travel": ["flight", "ticket", "seat", "passenger", "airport", "luggage", "fare", "gate"],
    "garden": ["plant", "seed", "soil", "harvest", "flower", "root", "leaf", "bed"],
    "medical": ["patient", "dose", "pulse", "clinic", "symptom", "doctor", "visit", "ward"],
    "library": ["book", "shelf", "loan", "reader", "chapter", "page", "author", "copy"],
    "energy": ["panel", "battery", "charge", "voltage", "grid", "meter", "load", "cell"],
}

COUNTERS = ["count", "total", "sum", "number"]
BOUNDS = ["max", "min", "limit", "capacity"]
SCALARS = ["value", "amount", "rate", "size", "length", "level", "weight", "offset"]
PREFIXES = ["current", "next", "last", "first", "new", "old", "expected", "actual"]
SUFFIXES = ["Manager", "Tracker", "Registry", "Planner", "Analyzer", "Buffer", "Monitor", "Scheduler"]


def cap(w):
    return w[0].upper() + w[1:]


def camel(words):
    return words[0] + "".join(cap(w) for w in words[1:])


class Scope:
    """Names visible in one method, by type."""

    def __init__(self, fields):
        self.vars = {"int": [], "double": [], "boolean": []}
        for ty, name in fields:
            self.vars[ty].append(name)
        self.taken = {n for _, n in fields}

    def add(self, ty, name):
        self.vars[ty].append(name)
        self.taken.add(name)

    def pick(self, rng, ty):
        pool = self.vars[ty]
        return rng.choice(pool) if pool else None


class ClassGen:
    def __init__(self, rng, nouns):
        self.rng = rng
        self.nouns = nouns
        self.fields = []
        self.methods = []

    def noun(self):
        return self.rng.choice(self.nouns)

    def fresh(self, taken, options):
        self.rng.shuffle(options)
        for words in options:
            name = camel(words)
            if name not in taken:
                return name
        n = len(taken)
        return camel(options[0]) + str(n)

    def int_name(self, taken, noun=None):
        noun = noun or self.noun()
        r = self.rng
        opts = [
            [noun, r.choice(COUNTERS)],
            [r.choice(BOUNDS), noun],
            [r.choice(PREFIXES), noun, r.choice(COUNTERS)],
            [noun, r.choice(["index", "offset", "size", "length"])],
        ]
        return self.fresh(taken, opts)

    def double_name(self, taken, noun=None):
        noun = noun or self.noun()
        r = self.rng
        opts = [
            [noun, r.choice(SCALARS)],
            [r.choice(PREFIXES), noun, r.choice(SCALARS)],
            ["average", noun, r.choice(SCALARS)],
            [r.choice(PREFIXES), noun],
        ]
        return self.fresh(taken, opts)

    def bool_name(self, taken, noun=None):
        noun = noun or self.noun()
        r = self.rng
        opts = [
            ["is", noun, r.choice(["full", "empty", "ready", "valid", "active"])],
            ["has", noun],
            [noun, r.choice(["ready", "valid", "done", "found"])],
        ]
        return self.fresh(taken, opts)


def make_name(gen, ty, taken, noun=None):
    return {"int": gen.int_name, "double": gen.double_name, "boolean": gen.bool_name}[ty](taken, noun)


def literal(rng, ty):
    if ty == "int":
        return str(rng.randint(0, 9))
    if ty == "double":
        return "%d.%d" % (rng.randint(0, 9), rng.randint(0, 9))
    return rng.choice(["true", "false"])


def operand(rng, scope, ty):
    name = scope.pick(rng, ty)
    if name is None or rng.random() < 0.2:
        return literal(rng, ty)
    return name


def method(gen, class_name, all_methods):
    """Returns (name, params, return type, body lines) for one method."""
    rng = gen.rng
    scope = Scope(gen.fields)
    noun = gen.noun()
    kind = rng.choice(["accumulate", "countdown", "average", "clamp", "check", "update", "search", "combine"])
    params = []

    def param(ty, hint=None):
        name = make_name(gen, ty, scope.taken, hint)
        scope.add(ty, name)
        params.append((ty, name))
        return name

    def local(ty, hint=None):
        name = make_name(gen, ty, scope.taken, hint)
        scope.add(ty, name)
        return name

    body = []
    if kind == "accumulate":
        limit = param("int", noun)
        step = param("int")
        total = local("int", noun)
        i = "index" if "index" not in scope.taken else "position"
        scope.add("int", i)
        body.append("int %s = 0;" % total)
        body.append("for (int %s = 0; %s < %s; %s++) {" % (i, i, limit, i))
        body.append("    %s += %s * %s;" % (total, step, i))
        if rng.random() < 0.5:
            f = scope.pick(rng, "int")
            body.append("    if (%s > %s) {" % (total, f))
            body.append("        %s = %s - %s;" % (total, total, f))
            body.append("    }")
        body.append("}")
        body.append("return %s;" % total)
        ret, verb = "int", rng.choice(["sum", "accumulate", "compute"])
    elif kind == "countdown":
        remaining = param("int", noun)
        step = param("int")
        count = local("int", noun)
        body.append("int %s = 0;" % count)
        body.append("while (%s > 0) {" % remaining)
        body.append("    %s = %s - %s;" % (remaining, remaining, step))
        body.append("    %s++;" % count)
        body.append("}")
        body.append("return %s;" % count)
        ret, verb = "int", rng.choice(["count", "drain", "consume"])
    elif kind == "average":
        total = param("double", noun)
        count = param("int", noun)
        avg = local("double", noun)
        body.append("double %s = 0.0;" % avg)
        body.append("if (%s > 0) {" % count)
        body.append("    %s = %s / %s;" % (avg, total, count))
        body.append("}")
        body.append("return %s;" % avg)
        ret, verb = "double", rng.choice(["average", "mean", "estimate"])
    elif kind == "clamp":
        value = param("double", noun)
        bound = param("double", noun)
        result = local("double", noun)
        body.append("double %s = %s;" % (result, value))
        body.append("if (%s > %s) {" % (result, bound))
        body.append("    %s = %s;" % (result, bound))
        body.append("} else {")
        body.append("    %s = %s + %s;" % (result, result, operand(rng, scope, "double")))
        body.append("}")
        body.append("return %s;" % result)
        ret, verb = "double", rng.choice(["clamp", "limit", "adjust"])
    elif kind == "check":
        count = param("int", noun)
        flag = local("boolean", noun)
        bound = scope.pick(rng, "int")
        body.append("boolean %s = %s >= %s;" % (flag, count, bound))
        body.append("if (%s && %s > 0) {" % (flag, count))
        body.append("    %s = %s != %s;" % (flag, count, operand(rng, scope, "int")))
        body.append("}")
        body.append("return %s;" % flag)
        ret, verb = "boolean", rng.choice(["check", "validate", "test"])
    elif kind == "update":
        target_f = scope.pick(rng, "double")
        counter_f = scope.pick(rng, "int")
        amount = param("double", noun)
        body.append("this.%s = %s + %s;" % (target_f, target_f, amount))
        body.append("%s++;" % counter_f)
        if rng.random() < 0.5:
            body.append("if (%s > %s) {" % (counter_f, scope.pick(rng, "int")))
            body.append("    %s = 0;" % counter_f)
            body.append("}")
        body.append("return %s;" % target_f)
        ret, verb = "double", rng.choice(["add", "record", "apply"])
    elif kind == "search":
        limit = param("int", noun)
        wanted = param("int", noun)
        found = local("int", noun)
        i = "index" if "index" not in scope.taken else "cursor"
        scope.add("int", i)
        body.append("int %s = 0 - 1;" % found)
        body.append("int %s = 0;" % i)
        body.append("while (%s < %s && %s < 0) {" % (i, limit, found))
        body.append("    if (%s * %s == %s) {" % (i, operand(rng, scope, "int"), wanted))
        body.append("        %s = %s;" % (found, i))
        body.append("    }")
        body.append("    %s++;" % i)
        body.append("}")
        body.append("return %s;" % found)
        ret, verb = "int", rng.choice(["find", "locate", "search"])
    else:
        first = param("double", noun)
        second = param("double")
        weight = local("double", noun)
        body.append("double %s = %s * %s;" % (weight, first, second))
        if all_methods:
            callee, cparams, cret = rng.choice(all_methods)
            if cret == "double" and all(t == "double" for t, _ in cparams):
                args = ", ".join(operand(rng, scope, t) for t, _ in cparams)
                body.append("%s = %s + %s(%s);" % (weight, weight, callee, args))
        body.append("%s += %s;" % (weight, operand(rng, scope, "double")))
        body.append("return %s - %s;" % (weight, second))
        ret, verb = "double", rng.choice(["combine", "blend", "merge"])

    name = camel([verb, noun] + ([rng.choice(SCALARS)] if rng.random() < 0.4 else []))
    existing = {m[0] for m in all_methods}
    while name in existing:
        name = name + "Again"
    return name, params, ret, body


def gen_class(rng, nouns):
    gen = ClassGen(rng, nouns)
    main = rng.choice(nouns)
    class_name = cap(main) + rng.choice(SUFFIXES)
    taken = set()
    for ty in ["int", "int", "double", "double", "boolean"] + rng.sample(["int", "double"], 1):
        name = make_name(gen, ty, taken)
        taken.add(name)
        gen.fields.append((ty, name))
    lines = ["public class %s {" % class_name]
    for ty, name in gen.fields:
        lines.append("    private %s %s;" % (ty, name))
    lines.append("")
    ctor_params = gen.fields[:2]
    lines.append("    public %s(%s) {" % (class_name, ", ".join("%s %s" % p for p in ctor_params)))
    for _, name in ctor_params:
        lines.append("        this.%s = %s;" % (name, name))
    for ty, name in gen.fields[2:]:
        lines.append("        %s = %s;" % (name, literal(rng, ty)))
    lines.append("    }")
    methods = []
    for _ in range(rng.randint(3, 5)):
        name, params, ret, body = method(gen, class_name, methods)
        methods.append((name, params, ret))
        lines.append("")
        sig = ", ".join("%s %s" % p for p in params)
        lines.append("    public %s %s(%s) {" % (ret, name, sig))
        lines.extend("        " + b for b in body)
        lines.append("    }")
    lines.append("}")
    return class_name, "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", required=True)
    ap.add_argument("--repos", type=int, default=len(DOMAINS))
    ap.add_argument("--files", type=int, default=14)
    ap.add_argument("--seed", type=int, default=2018)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = Path(args.out)
    if out.exists():
        shutil.rmtree(out)
    for domain in list(DOMAINS)[: args.repos]:
        repo = out / domain
        repo.mkdir(parents=True)
        seen = set()
        while len(seen) < args.files:
            name, text = gen_class(rng, DOMAINS[domain])
            if name in seen:
                continue
            seen.add(name)
            (repo / (name + ".java")).write_text(text)


if __name__ == "__main__":
    main()
