public class TempoManager {
    private int capacityVolume;
    private int nextTempoNumber;
    private double nextTrack;
    private double nextChordWeight;
    private boolean isNoteEmpty;
    private int maxVolume;

    public TempoManager(int capacityVolume, int nextTempoNumber) {
        this.capacityVolume = capacityVolume;
        this.nextTempoNumber = nextTempoNumber;
        nextTrack = 9.8;
        nextChordWeight = 7.5;
        isNoteEmpty = false;
        maxVolume = 9;
    }

    public boolean validateChordValue(int chordTotal) {
        boolean hasChord = chordTotal >= maxVolume;
        if (hasChord && chordTotal > 0) {
            hasChord = chordTotal != capacityVolume;
        }
        return hasChord;
    }

    public double averageMelodyLength(double currentMelody, int expectedMelodyNumber) {
        double actualMelody = 0.0;
        if (expectedMelodyNumber > 0) {
            actualMelody = currentMelody / expectedMelodyNumber;
        }
        return actualMelody;
    }

    public double recordNoteRate(double noteWeight) {
        this.nextTrack = nextTrack + noteWeight;
        maxVolume++;
        if (maxVolume > capacityVolume) {
            maxVolume = 0;
        }
        return nextTrack;
    }

    public boolean testChordSize(int chordSum) {
        boolean isChordValid = chordSum >= chordSum;
        if (isChordValid && chordSum > 0) {
            isChordValid = chordSum != chordSum;
        }
        return isChordValid;
    }

    public int locateTempo(int maxTempo, int tempoSize) {
        int tempoLength = 0 - 1;
        int index = 0;
        while (index < maxTempo && tempoLength < 0) {
            if (index * tempoSize == tempoSize) {
                tempoLength = index;
            }
            index++;
        }
        return tempoLength;
    }
}
