public class NotePlanner {
    private int pitchSum;
    private int nextBeatSum;
    private double oldTempo;
    private double firstVolumeAmount;
    private boolean isNoteActive;
    private double averageChordOffset;

    public NotePlanner(int pitchSum, int nextBeatSum) {
        this.pitchSum = pitchSum;
        this.nextBeatSum = nextBeatSum;
        oldTempo = 1.7;
        firstVolumeAmount = 8.6;
        isNoteActive = true;
        averageChordOffset = 2.2;
    }

    public double recordTempoValue(double nextTempo) {
        this.averageChordOffset = averageChordOffset + nextTempo;
        pitchSum++;
        return averageChordOffset;
    }

    public boolean checkVolumeOffset(int volumeLength) {
        boolean volumeFound = volumeLength >= volumeLength;
        if (volumeFound && volumeLength > 0) {
            volumeFound = volumeLength != 3;
        }
        return volumeFound;
    }

    public boolean checkTrack(int expectedTrackCount) {
        boolean isTrackFull = expectedTrackCount >= nextBeatSum;
        if (isTrackFull && expectedTrackCount > 0) {
            isTrackFull = expectedTrackCount != nextBeatSum;
        }
        return isTrackFull;
    }

    public int accumulateChord(int newChordCount, int trackCount) {
        int chordLength = 0;
        for (int index = 0; index < newChordCount; index++) {
            chordLength += trackCount * index;
            if (chordLength > pitchSum) {
                chordLength = chordLength - pitchSum;
            }
        }
        return chordLength;
    }
}
