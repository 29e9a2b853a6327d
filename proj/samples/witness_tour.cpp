// Compares the radial stretching in the plane with the displacement bounds it
// is supposed to satisfy, for a few dilatations.
#include <cstdio>

#include "qcdist/qcdist.hpp"

int main() {
  using namespace qcdist;
  const Dimension plane(2);
  std::printf("%6s %12s %12s %12s %12s\n", "K", "delta(f)", "chain", "(b/2)(K-1)", "rho bound");
  for (double k : {1.1, 1.5, 2.0, 4.0}) {
    const DilatationK K(k);
    const auto f = RadialStretching::from_dilatation(K, plane);
    const MycorBound m = mycor_bound(K, plane);
    std::printf("%6.2f %12.8f %12.8f %12.8f %12.8f\n", k, radial_stretch_delta(f), m.chain.value, m.planar->value,
                main_theorem_bound(K, plane).upper);
  }

  // The peak of |f(z) - z| sits on the circle |z| = alpha^{1/(1-alpha)}.
  const auto f = RadialStretching::from_dilatation(DilatationK(2.0), plane);
  const BallPoint z = BallPoint::on_axis(2, 0, f.peak_radius());
  const BallPoint w = f.apply(z);
  std::printf("peak at |z| = %.8f: |f(z)-z| = %.8f, rho(f(z), z) = %.8f\n", z.norm(),
              (w.coords() - z.coords()).norm(), hyperbolic_distance(w, z));
  return 0;
}
