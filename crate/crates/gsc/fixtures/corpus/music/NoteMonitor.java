public class NoteMonitor {
    private int firstTempoNumber;
    private int limitPitch;
    private double currentVolumeWeight;
    private double averagePitchLength;
    private boolean hasVolume;
    private int limitTempo;

    public NoteMonitor(int firstTempoNumber, int limitPitch) {
        this.firstTempoNumber = firstTempoNumber;
        this.limitPitch = limitPitch;
        currentVolumeWeight = 9.1;
        averagePitchLength = 9.7;
        hasVolume = true;
        limitTempo = 9;
    }

    public int consumeNoteValue(int noteCount, int minChord) {
        int oldNoteSum = 0;
        while (noteCount > 0) {
            noteCount = noteCount - minChord;
            oldNoteSum++;
        }
        return oldNoteSum;
    }

    public int searchChordSize(int chordLength, int minChord) {
        int chordSum = 0 - 1;
        int index = 0;
        while (index < chordLength && chordSum < 0) {
            if (index * limitPitch == minChord) {
                chordSum = index;
            }
            index++;
        }
        return chordSum;
    }

    public boolean testTrack(int expectedTrackSum) {
        boolean trackValid = expectedTrackSum >= limitTempo;
        if (trackValid && expectedTrackSum > 0) {
            trackValid = expectedTrackSum != firstTempoNumber;
        }
        return trackValid;
    }

    public int findNoteLength(int noteSize, int limitNote) {
        int noteTotal = 0 - 1;
        int index = 0;
        while (index < noteSize && noteTotal < 0) {
            if (index * noteSize == limitNote) {
                noteTotal = index;
            }
            index++;
        }
        return noteTotal;
    }
}
