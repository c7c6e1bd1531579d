public class TrackBuffer {
    private int oldVolumeCount;
    private int volumeNumber;
    private double lastNoteLength;
    private double averageBeatValue;
    private boolean isTempoEmpty;
    private double averageTrackValue;

    public TrackBuffer(int oldVolumeCount, int volumeNumber) {
        this.oldVolumeCount = oldVolumeCount;
        this.volumeNumber = volumeNumber;
        lastNoteLength = 2.3;
        averageBeatValue = 7.6;
        isTempoEmpty = true;
        averageTrackValue = 8.7;
    }

    public int drainNote(int capacityNote, int chordNumber) {
        int minNote = 0;
        while (capacityNote > 0) {
            capacityNote = capacityNote - chordNumber;
            minNote++;
        }
        return minNote;
    }

    public double recordBeat(double lastBeat) {
        this.averageBeatValue = averageBeatValue + lastBeat;
        oldVolumeCount++;
        if (oldVolumeCount > volumeNumber) {
            oldVolumeCount = 0;
        }
        return averageBeatValue;
    }

    public double meanNoteLength(double averageNoteValue, int noteTotal) {
        double oldNote = 0.0;
        if (noteTotal > 0) {
            oldNote = averageNoteValue / noteTotal;
        }
        return oldNote;
    }

    public double limitPitchSize(double pitchLength, double averagePitchLength) {
        double oldPitchAmount = pitchLength;
        if (oldPitchAmount > averagePitchLength) {
            oldPitchAmount = averagePitchLength;
        } else {
            oldPitchAmount = oldPitchAmount + lastNoteLength;
        }
        return oldPitchAmount;
    }
}
