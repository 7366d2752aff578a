// Minimal use of the header-only library: zeros of one polynomial and one interlacing check.

#include <qmeixner/analysis.hpp>
#include <qmeixner/decimal.hpp>
#include <qmeixner/zeros.hpp>

#include <iostream>

int main() {
  using namespace qmeixner;
  const MeixnerParams p{6, Rational(-3, 2), Rational(1, 2)};

  const ZeroSet zs = zeros_of(p, Rational(1, 1000000000000LL));
  std::cout << "M_6(x; -3/2, 1/2) has " << zs.real_count << " real zeros\n";
  for (const auto& iv : zs.intervals) std::cout << "  " << to_decimal(iv.midpoint(), 12) << '\n';

  const Verdict v = verify_bounds_qo2(p);
  std::cout << v.theorem_id << ": " << to_string(v.status) << " (" << v.detail << ")\n";
  return v.status == Status::Fail;
}
