// p-wave resonance from a surface condition close to the rescaled limit:
// compares the exact phase shift with the two-parameter and zero-range
// formulas and locates the corresponding S-matrix pole.

#include <cstdio>

#include "shortrange/shortrange.hpp"

int main() {
  using namespace shortrange;

  const Channel ch{1, 0.1, -25.0};
  const RobinCondition rc = robin_from_channel(ch);
  std::printf("l=%d lambda=%g chi=%g -> C=%g\n", ch.l, ch.lambda, ch.chi, rc.c);

  const auto ks = uniform_grid(0.25, 3.0, 12);
  const auto pts = scan_phase_shifts(rc, ch, ks);
  std::printf("%8s %12s %12s %12s\n", "k", "full", "eff", "zero");
  for (const auto& p : pts) std::printf("%8.3f %12.6f %12.6f %12.6f\n", p.k, p.delta_full, p.delta_eff, p.delta_zero);

  for (const auto& pole : find_poles(ch))
    if (pole.kind == PoleKind::Resonance)
      std::printf("resonance pole k = %.6f %+.6fi\n", pole.k_pole.real(), pole.k_pole.imag());

  const SquareWell well = square_well_depth(rc);
  std::printf("square well realizing C: depth U=%.6g (ktilde=%.6g)\n", well.depth, well.ktilde);
  std::printf("delta shell realizing C: v=%.6g\n", delta_shell_strength(rc));
}
