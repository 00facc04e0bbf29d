/** @file sturm.cpp

    @brief Sturm sequences.
*/
#include "g1/sturm.hpp"

#include "g1/error.hpp"

namespace g1 {

std::vector<UniPoly> sturm_chain(const UniPoly& p)
{
    std::vector<UniPoly> chain{p};
    UniPoly d = p.derivative();
    while (!d.is_zero()) {
        chain.push_back(d);
        UniPoly q, r;
        chain[chain.size() - 2].divmod(d, q, r);
        d = -r;
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        const int s = sgn(p(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int count_roots(const UniPoly& p, const Rational& lo, const Rational& hi)
{
    if (p.is_zero())
        throw Error(ErrorKind::Internal, "root count of the zero polynomial");
    UniPoly q, r;
    // Squarefree part, then strip endpoint roots so Sturm applies on the open interval.
    UniPoly sf = p;
    const UniPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) {
        p.divmod(g, q, r);
        sf = q;
    }
    int count = 0;
    for (const Rational& x : {lo, hi}) {
        if (sf(x) == 0) {
            ++count;
            sf.divmod(UniPoly{-x, 1}, q, r);
            sf = q;
        }
        if (lo == hi)
            break;
    }
    if (lo < hi) {
        const auto chain = sturm_chain(sf);
        count += sign_variations(chain, lo) - sign_variations(chain, hi);
    }
    return count;
}

} // namespace g1
