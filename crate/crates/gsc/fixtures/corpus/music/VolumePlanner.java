public class VolumePlanner {
    private int firstMelodyCount;
    private int pitchOffset;
    private double trackWeight;
    private double expectedPitch;
    private boolean chordReady;
    private double averageTrackLength;

    public VolumePlanner(int firstMelodyCount, int pitchOffset) {
        this.firstMelodyCount = firstMelodyCount;
        this.pitchOffset = pitchOffset;
        trackWeight = 7.2;
        expectedPitch = 5.3;
        chordReady = true;
        averageTrackLength = 7.3;
    }

    public boolean checkMelody(int melodySize) {
        boolean isMelodyActive = melodySize >= pitchOffset;
        if (isMelodyActive && melodySize > 0) {
            isMelodyActive = melodySize != pitchOffset;
        }
        return isMelodyActive;
    }

    public boolean validateChordAmount(int chordSize) {
        boolean hasChord = chordSize >= firstMelodyCount;
        if (hasChord && chordSize > 0) {
            hasChord = chordSize != 6;
        }
        return hasChord;
    }

    public double limitPitchSize(double nextPitchSize, double nextPitch) {
        double averagePitchWeight = nextPitchSize;
        if (averagePitchWeight > nextPitch) {
            averagePitchWeight = nextPitch;
        } else {
            averagePitchWeight = averagePitchWeight + 9.8;
        }
        return averagePitchWeight;
    }
}
