#include <qseries/monomial.hpp>

namespace qseries
{

Mono Mono::pow(int k) const
{
    return Mono{coeff.pow(k), k * exps};
}

Mono Mono::inverse() const
{
    return pow(-1);
}

std::string format_monomial(const Exponents &e, const std::vector<std::string> &names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size() && i < kMaxVars; ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names[i];
        if (e[i] != 1) {
            out += '^';
            out += e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]);
        }
    }
    return out.empty() ? "1" : out;
}

} // namespace qseries
