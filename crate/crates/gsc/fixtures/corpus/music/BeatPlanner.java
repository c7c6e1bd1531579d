public class BeatPlanner {
    private int minPitch;
    private int capacityBeat;
    private double expectedBeat;
    private double oldVolume;
    private boolean isTempoValid;
    private int tempoLength;

    public BeatPlanner(int minPitch, int capacityBeat) {
        this.minPitch = minPitch;
        this.capacityBeat = capacityBeat;
        expectedBeat = 7.4;
        oldVolume = 9.5;
        isTempoValid = true;
        tempoLength = 9;
    }

    public double estimateVolumeValue(double averageVolumeRate, int newVolumeSum) {
        double averageVolumeAmount = 0.0;
        if (newVolumeSum > 0) {
            averageVolumeAmount = averageVolumeRate / newVolumeSum;
        }
        return averageVolumeAmount;
    }

    public boolean checkTrack(int lastTrackTotal) {
        boolean isTrackValid = lastTrackTotal >= capacityBeat;
        if (isTrackValid && lastTrackTotal > 0) {
            isTrackValid = lastTrackTotal != minPitch;
        }
        return isTrackValid;
    }

    public double clampNote(double oldNote, double nextNote) {
        double noteRate = oldNote;
        if (noteRate > nextNote) {
            noteRate = nextNote;
        } else {
            noteRate = noteRate + expectedBeat;
        }
        return noteRate;
    }

    public double recordVolume(double actualVolume) {
        this.oldVolume = oldVolume + actualVolume;
        minPitch++;
        if (minPitch > tempoLength) {
            minPitch = 0;
        }
        return oldVolume;
    }
}
