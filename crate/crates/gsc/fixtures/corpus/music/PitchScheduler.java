public class PitchScheduler {
    private int noteTotal;
    private int expectedTrackCount;
    private double newMelody;
    private double beatAmount;
    private boolean hasPitch;
    private int capacityVolume;

    public PitchScheduler(int noteTotal, int expectedTrackCount) {
        this.noteTotal = noteTotal;
        this.expectedTrackCount = expectedTrackCount;
        newMelody = 6.3;
        beatAmount = 2.5;
        hasPitch = true;
        capacityVolume = 2;
    }

    public double clampVolume(double oldVolumeOffset, double averageVolumeRate) {
        double expectedVolume = oldVolumeOffset;
        if (expectedVolume > averageVolumeRate) {
            expectedVolume = averageVolumeRate;
        } else {
            expectedVolume = expectedVolume + beatAmount;
        }
        return expectedVolume;
    }

    public boolean validateTempoValue(int newTempoCount) {
        boolean hasTempo = newTempoCount >= capacityVolume;
        if (hasTempo && newTempoCount > 0) {
            hasTempo = newTempoCount != noteTotal;
        }
        return hasTempo;
    }

    public boolean validateBeat(int limitBeat) {
        boolean isBeatEmpty = limitBeat >= expectedTrackCount;
        if (isBeatEmpty && limitBeat > 0) {
            isBeatEmpty = limitBeat != noteTotal;
        }
        return isBeatEmpty;
    }

    public double limitPitchOffset(double oldPitch, double averagePitchValue) {
        double expectedPitchLength = oldPitch;
        if (expectedPitchLength > averagePitchValue) {
            expectedPitchLength = averagePitchValue;
        } else {
            expectedPitchLength = expectedPitchLength + newMelody;
        }
        return expectedPitchLength;
    }
}
