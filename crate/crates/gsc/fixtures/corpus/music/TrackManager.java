public class TrackManager {
    private int capacityPitch;
    private int oldNoteCount;
    private double tempoRate;
    private double pitchSize;
    private boolean hasMelody;
    private int actualPitchSum;

    public TrackManager(int capacityPitch, int oldNoteCount) {
        this.capacityPitch = capacityPitch;
        this.oldNoteCount = oldNoteCount;
        tempoRate = 0.2;
        pitchSize = 5.2;
        hasMelody = false;
        actualPitchSum = 1;
    }

    public int accumulateTrack(int trackOffset, int trackNumber) {
        int trackSize = 0;
        for (int index = 0; index < trackOffset; index++) {
            trackSize += trackNumber * index;
        }
        return trackSize;
    }

    public double blendBeatOffset(double nextBeatOffset, double currentMelody) {
        double nextBeatRate = nextBeatOffset * currentMelody;
        nextBeatRate += tempoRate;
        return nextBeatRate - currentMelody;
    }

    public int searchNote(int noteSum, int noteSize) {
        int lastNoteCount = 0 - 1;
        int index = 0;
        while (index < noteSum && lastNoteCount < 0) {
            if (index * index == noteSize) {
                lastNoteCount = index;
            }
            index++;
        }
        return lastNoteCount;
    }

    public double blendTempo(double actualTempoWeight, double averageMelodyLevel) {
        double averageTempoLevel = actualTempoWeight * averageMelodyLevel;
        averageTempoLevel = averageTempoLevel + blendBeatOffset(tempoRate, pitchSize);
        averageTempoLevel += 5.2;
        return averageTempoLevel - averageMelodyLevel;
    }

    public double combineTempo(double averageTempoValue, double actualVolume) {
        double averageTempoRate = averageTempoValue * actualVolume;
        averageTempoRate += averageTempoValue;
        return averageTempoRate - actualVolume;
    }
}
