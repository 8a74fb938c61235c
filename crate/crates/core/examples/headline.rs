//! Quick driver for the headline computation: is the bundled five-variable
//! quartic a sum of 7 squares?

use sos_core::certify::{decide_t_squares, SosInstance};
use sos_core::groebner::Budget;
use sos_core::instances;
use sos_core::poly::MonomialOrder;

fn main() {
    let inst =
        SosInstance::from_instance_text("example-2.2", instances::FIVE_VAR_EIGHT_SQUARES).unwrap();
    for t in [7usize, 8] {
        let t0 = std::time::Instant::now();
        let verdict =
            decide_t_squares(&inst, t, MonomialOrder::DegRevLex, &Budget::default()).unwrap();
        println!("t={t}: {} in {:.2?}", verdict.as_str(), t0.elapsed());
    }
}
