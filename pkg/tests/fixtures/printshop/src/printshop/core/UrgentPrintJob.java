package printshop.core;

public class UrgentPrintJob extends PrintJob {
    private int deadlineMinutes;

    public UrgentPrintJob(String name, int pages, int copies, int deadlineMinutes) {
        super(name, pages, copies);
        this.deadlineMinutes = deadlineMinutes;
        markUrgent();
    }

    public int rushBand(boolean operatorOnDuty, boolean inkLow, boolean weekend) {
        int band = 0;
        if (operatorOnDuty) {
            if (inkLow) {
                if (weekend) {
                    band = 7;
                } else {
                    band = 6;
                }
            } else {
                band = 4;
            }
        } else {
            if (weekend) {
                band = 2;
            }
        }
        return band;
    }
}
