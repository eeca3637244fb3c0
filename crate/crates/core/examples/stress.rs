use centro_core::*;

struct Rng(u64);
impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }
    fn unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }
    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
    fn int(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next() as usize) % (hi - lo + 1)
    }
}

fn main() {
    let mut rng = Rng(0xFEED);
    let mut realized = 0usize;
    let mut errored = 0usize;
    let mut worst: f64 = 0.0;
    for trial in 0..20000 {
        // scale spans 1e-8 .. 1e8
        let exp = rng.range(-8.0, 8.0);
        let s = 10f64.powf(exp);
        let r = rng.int(0, 5);
        let m = rng.int(0, 4);
        if r + 2 * m < 1 {
            continue;
        }
        let mut reals: Vec<f64> = (0..r).map(|_| s * rng.range(-3.0, 5.0)).collect();
        let pairs: Vec<(f64, f64)> = (0..m)
            .map(|_| (s * rng.range(-3.0, 3.0), s * rng.range(0.01, 3.0)))
            .collect();
        if trial % 3 == 0 {
            // bias toward admissible lists with dominant heads
            let tail: f64 = reals.iter().map(|x| -x.abs()).sum::<f64>()
                + 2.0 * pairs.iter().map(|p| -(p.0.abs())).sum::<f64>();
            reals = reals.iter().map(|x| -x.abs()).collect();
            reals.insert(0, -tail + s * rng.range(0.0, 2.0));
        }
        let list = SpectrumList::from_parts(reals, pairs);
        match auto_realize(&list, None) {
            Ok(real) => {
                realized += 1;
                let rep = verify_realization(&real, &list, MatchTolerance::default())
                    .expect("verification must run");
                if !rep.accepted {
                    println!(
                        "REJECTED trial {trial} ({}) scale 1e{exp:.1}: dist {:e} resid {:e} margin {:e}",
                        real.provenance.construction,
                        rep.spectrum.max_distance,
                        rep.centro_residual,
                        rep.nonneg_margin
                    );
                    std::process::exit(1);
                }
                worst = worst.max(rep.spectrum.max_distance / s.max(1.0));
            }
            Err(_) => errored += 1,
        }
    }
    println!(
        "stress ok: {realized} realized, {errored} declined, worst scaled distance {worst:.2e}"
    );
}
