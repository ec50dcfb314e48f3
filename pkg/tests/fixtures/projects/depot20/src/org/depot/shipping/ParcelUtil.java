package org.depot.shipping;

import java.util.ArrayList;
import java.util.List;

/**
 * Dock support for the shipping module.
 */
public class ParcelUtil {
    private final List<String> freightNames = new ArrayList<>();
    private CarrierLabelController carrierLabelController;

    public void loadCourier0(CarrierLabelController courierCarrier) {
        CarrierLabelController courier0 = new CarrierLabelController();
        if (carrierLabelController == null) {
            carrierLabelController = courierCarrier;
        }
        freightNames.add("load courier");
    }

    public int labelCarrier() {
        return 0;
    }
}
