public class MelodyAnalyzer {
    private int pitchLength;
    private int capacityTempo;
    private double chordValue;
    private double expectedVolumeAmount;
    private boolean hasTempo;
    private double averageMelodyLevel;

    public MelodyAnalyzer(int pitchLength, int capacityTempo) {
        this.pitchLength = pitchLength;
        this.capacityTempo = capacityTempo;
        chordValue = 7.1;
        expectedVolumeAmount = 9.4;
        hasTempo = true;
        averageMelodyLevel = 0.2;
    }

    public double adjustTempo(double nextTempo, double actualTempoWeight) {
        double firstTempo = nextTempo;
        if (firstTempo > actualTempoWeight) {
            firstTempo = actualTempoWeight;
        } else {
            firstTempo = firstTempo + actualTempoWeight;
        }
        return firstTempo;
    }

    public int countVolume(int volumeNumber, int currentVolumeNumber) {
        int capacityVolume = 0;
        while (volumeNumber > 0) {
            volumeNumber = volumeNumber - currentVolumeNumber;
            capacityVolume++;
        }
        return capacityVolume;
    }

    public double blendVolume(double averageVolumeRate, double oldTempoOffset) {
        double averageVolumeOffset = averageVolumeRate * oldTempoOffset;
        averageVolumeOffset += expectedVolumeAmount;
        return averageVolumeOffset - oldTempoOffset;
    }

    public double applyNote(double noteRate) {
        this.averageMelodyLevel = averageMelodyLevel + noteRate;
        pitchLength++;
        if (pitchLength > pitchLength) {
            pitchLength = 0;
        }
        return averageMelodyLevel;
    }

    public int findMelodyWeight(int melodyTotal, int melodyCount) {
        int lastMelodyNumber = 0 - 1;
        int index = 0;
        while (index < melodyTotal && lastMelodyNumber < 0) {
            if (index * 2 == melodyCount) {
                lastMelodyNumber = index;
            }
            index++;
        }
        return lastMelodyNumber;
    }
}
