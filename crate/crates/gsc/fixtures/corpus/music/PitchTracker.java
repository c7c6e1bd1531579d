public class PitchTracker {
    private int expectedBeatSum;
    private int chordIndex;
    private double noteValue;
    private double averageTempoSize;
    private boolean isTempoEmpty;
    private int nextMelodySum;

    public PitchTracker(int expectedBeatSum, int chordIndex) {
        this.expectedBeatSum = expectedBeatSum;
        this.chordIndex = chordIndex;
        noteValue = 0.5;
        averageTempoSize = 0.7;
        isTempoEmpty = true;
        nextMelodySum = 0;
    }

    public double averageNote(double actualNote, int capacityNote) {
        double newNote = 0.0;
        if (capacityNote > 0) {
            newNote = actualNote / capacityNote;
        }
        return newNote;
    }

    public int drainVolume(int expectedVolumeSum, int actualMelodySum) {
        int firstVolumeTotal = 0;
        while (expectedVolumeSum > 0) {
            expectedVolumeSum = expectedVolumeSum - actualMelodySum;
            firstVolumeTotal++;
        }
        return firstVolumeTotal;
    }

    public int searchBeat(int capacityBeat, int nextBeatCount) {
        int actualBeatCount = 0 - 1;
        int index = 0;
        while (index < capacityBeat && actualBeatCount < 0) {
            if (index * expectedBeatSum == nextBeatCount) {
                actualBeatCount = index;
            }
            index++;
        }
        return actualBeatCount;
    }

    public int drainBeatLevel(int capacityBeat, int tempoSize) {
        int actualBeatTotal = 0;
        while (capacityBeat > 0) {
            capacityBeat = capacityBeat - tempoSize;
            actualBeatTotal++;
        }
        return actualBeatTotal;
    }

    public double recordBeat(double averageBeatOffset) {
        this.averageTempoSize = averageTempoSize + averageBeatOffset;
        chordIndex++;
        return averageTempoSize;
    }
}
