public class ChordAnalyzer {
    private int firstBeatSum;
    private int chordTotal;
    private double averageTempoSize;
    private double trackValue;
    private boolean hasBeat;
    private int maxBeat;

    public ChordAnalyzer(int firstBeatSum, int chordTotal) {
        this.firstBeatSum = firstBeatSum;
        this.chordTotal = chordTotal;
        averageTempoSize = 5.6;
        trackValue = 1.5;
        hasBeat = false;
        maxBeat = 0;
    }

    public double addMelody(double expectedMelody) {
        this.trackValue = trackValue + expectedMelody;
        chordTotal++;
        return trackValue;
    }

    public int drainBeat(int nextBeatTotal, int volumeSum) {
        int beatNumber = 0;
        while (nextBeatTotal > 0) {
            nextBeatTotal = nextBeatTotal - volumeSum;
            beatNumber++;
        }
        return beatNumber;
    }

    public int computeChord(int limitChord, int pitchLength) {
        int chordNumber = 0;
        for (int index = 0; index < limitChord; index++) {
            chordNumber += pitchLength * index;
            if (chordNumber > limitChord) {
                chordNumber = chordNumber - limitChord;
            }
        }
        return chordNumber;
    }

    public double estimateChord(double firstChordWeight, int chordSize) {
        double actualChordLength = 0.0;
        if (chordSize > 0) {
            actualChordLength = firstChordWeight / chordSize;
        }
        return actualChordLength;
    }
}
