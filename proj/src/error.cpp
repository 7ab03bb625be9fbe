#include "shadowham/error.hpp"

#include <fmt/format.h>

namespace shadowham {

Divergent::Divergent(double x)
    : DomainError(fmt::format("F(x) diverges for |x| >= 2 (x = {})", x)), x_(x) {}

NoEllipticLog::NoEllipticLog(double trace)
    : DomainError(fmt::format("no elliptic logarithm: |trace| = {} >= 2", trace < 0 ? -trace : trace)),
      trace_(trace) {}

RationalOverflow::RationalOverflow(std::size_t step, std::size_t bits)
    : std::runtime_error(fmt::format("rational state exceeded {} bits at step {}", bits, step)),
      step_(step),
      bits_(bits) {}

}  // namespace shadowham
