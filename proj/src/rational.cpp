/** @file rational.cpp

    @brief Rational parsing/formatting and error names.
*/
#include "g1/error.hpp"
#include "g1/rational.hpp"

#include <cctype>

namespace g1 {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DegreeStructure: return "DegreeStructure";
    case ErrorKind::ParseRational: return "ParseRational";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::SlotReuse: return "SlotReuse";
    case ErrorKind::SelfGluedEdge: return "SelfGluedEdge";
    case ErrorKind::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorKind::MissingGluing: return "MissingGluing";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::Condition1Violated: return "Condition1Violated";
    case ErrorKind::Condition2Violated: return "Condition2Violated";
    case ErrorKind::CrossingVertexDegree: return "CrossingVertexDegree";
    case ErrorKind::TopologyViolated: return "TopologyViolated";
    case ErrorKind::InfeasibleCorrection: return "InfeasibleCorrection";
    case ErrorKind::NonCoprimeInput: return "NonCoprimeInput";
    case ErrorKind::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorKind::PropagationInconsistent: return "PropagationInconsistent";
    case ErrorKind::SingularInconsistent: return "SingularInconsistent";
    case ErrorKind::IntegralInfeasible: return "IntegralInfeasible";
    case ErrorKind::BelowSeparability: return "BelowSeparability";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

bool valid_integer(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::ParseRational, "malformed rational '" + s + "'");
    Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0)
        throw Error(ErrorKind::ParseRational, "zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer binomial(int n, int r)
{
    if (r < 0 || r > n || n < 0)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

} // namespace g1
