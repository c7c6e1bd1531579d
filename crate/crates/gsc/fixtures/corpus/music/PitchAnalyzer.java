public class PitchAnalyzer {
    private int melodyNumber;
    private int maxPitch;
    private double chordLevel;
    private double chordSize;
    private boolean isMelodyFull;
    private int maxNote;

    public PitchAnalyzer(int melodyNumber, int maxPitch) {
        this.melodyNumber = melodyNumber;
        this.maxPitch = maxPitch;
        chordLevel = 5.6;
        chordSize = 4.0;
        isMelodyFull = true;
        maxNote = 5;
    }

    public double recordTrack(double averageTrackOffset) {
        this.chordSize = chordSize + averageTrackOffset;
        maxPitch++;
        return chordSize;
    }

    public int sumMelody(int limitMelody, int actualMelodyCount) {
        int melodyTotal = 0;
        for (int index = 0; index < limitMelody; index++) {
            melodyTotal += actualMelodyCount * index;
            if (melodyTotal > actualMelodyCount) {
                melodyTotal = melodyTotal - actualMelodyCount;
            }
        }
        return melodyTotal;
    }

    public int searchTrack(int trackIndex, int maxTrack) {
        int trackOffset = 0 - 1;
        int index = 0;
        while (index < trackIndex && trackOffset < 0) {
            if (index * maxPitch == maxTrack) {
                trackOffset = index;
            }
            index++;
        }
        return trackOffset;
    }

    public double applyMelodyRate(double melodyWeight) {
        this.chordLevel = chordLevel + melodyWeight;
        maxNote++;
        return chordLevel;
    }
}
