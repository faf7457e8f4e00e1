#include "qhyp/analysis.hpp"

namespace qhyp {

RootMatch equal_up_to_root(const Complex& x, const Complex& y, long order, const Real& tol) {
    if (abs(y).is_zero()) throw DomainError("equal_up_to_root: y must be nonzero");
    if (order <= 0) throw DomainError("equal_up_to_root: order must be positive");
    Complex r = x / y;
    Real modulus_dev = abs(abs(r) - Real(1));
    Real two_pi = Real(2) * Real::pi();
    Real phi = arg(r);
    Real steps = round(phi * Real(order) / two_pi);
    Real phase_dev = abs(phi - steps * two_pi / Real(order));
    RootMatch out;
    out.index = static_cast<long>(mod(static_cast<long long>(steps.to_double()), order));
    out.deviation = max(modulus_dev, phase_dev);
    out.ok = out.deviation < tol;
    return out;
}

}  // namespace qhyp
