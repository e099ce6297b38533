/**
 * Bockstein maps for 0 -> Z -> Q -> Q/Z -> 0 and the averaging inverse on
 * integral cocycles.
 */
#ifndef DWINV_BOCKSTEIN_HPP
#define DWINV_BOCKSTEIN_HPP

#include "dwinv/chains.hpp"

namespace dwinv {

/// Raised when an input required to be a cocycle is not one.
class NotCocycleError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// beta(phi)(g, h) = 1 if rep(phi(g)) + rep(phi(h)) >= 1, else 0; applied pointwise.
IntCochain bockstein_one(const QZCochain& phi);

/// delta of the canonical [0,1) lift. Checks that c is a cocycle.
IntCochain bockstein(const QZCochain& c);

/**
 * Inverse Bockstein of an integral (n+1)-cocycle C, n >= 1:
 * (g1..gn) -> (1/|G|) sum_g C(g, g1..gn) mod 1.
 *
 * Summing the cocycle identity over the first slot gives |G| C = delta(hC)
 * with hC the inner sum, so beta of the output is cohomologous to C.
 * With verify set, C is checked to be a cocycle first.
 */
QZCochain bockstein_inverse(const IntCochain& c, bool verify = true);

/// bockstein_inverse restricted to degree-4 input.
QZCochain bockstein_inverse_four(const IntCochain& c4, bool verify = true);

}   // namespace dwinv

#endif
