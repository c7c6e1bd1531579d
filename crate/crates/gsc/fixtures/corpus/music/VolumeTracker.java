public class VolumeTracker {
    private int volumeOffset;
    private int tempoSum;
    private double lastVolume;
    private double newVolume;
    private boolean hasPitch;
    private int chordSize;

    public VolumeTracker(int volumeOffset, int tempoSum) {
        this.volumeOffset = volumeOffset;
        this.tempoSum = tempoSum;
        lastVolume = 3.4;
        newVolume = 7.1;
        hasPitch = true;
        chordSize = 0;
    }

    public double averageMelodyLevel(double newMelody, int melodyLength) {
        double currentMelody = 0.0;
        if (melodyLength > 0) {
            currentMelody = newMelody / melodyLength;
        }
        return currentMelody;
    }

    public double addPitch(double firstPitch) {
        this.newVolume = newVolume + firstPitch;
        volumeOffset++;
        if (volumeOffset > volumeOffset) {
            volumeOffset = 0;
        }
        return newVolume;
    }

    public boolean checkChord(int chordLength) {
        boolean hasChord = chordLength >= tempoSum;
        if (hasChord && chordLength > 0) {
            hasChord = chordLength != chordSize;
        }
        return hasChord;
    }

    public boolean testPitch(int actualPitchNumber) {
        boolean pitchFound = actualPitchNumber >= volumeOffset;
        if (pitchFound && actualPitchNumber > 0) {
            pitchFound = actualPitchNumber != volumeOffset;
        }
        return pitchFound;
    }
}
