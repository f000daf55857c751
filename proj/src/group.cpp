#include "sperner/group.hpp"

#include <cctype>

#include "sperner/errors.hpp"

namespace sperner {

std::unique_ptr<GroupSource> parse_group_spec(const std::string& spec, const GroupBudgets& budgets) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += char(std::tolower(c));
    if (s.empty()) throw ParameterError("empty group spec");
    if (s[0] == 'g' && s.size() > 1 && s[1] == '(') {
        if (s.back() != ')')
            throw ParameterError("group spec `" + spec + "`: expected g(m,p,n)");
        std::string inner = s.substr(2, s.size() - 3);
        int vals[3];
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            size_t comma = (i < 2) ? inner.find(',', pos) : inner.size();
            if (comma == std::string::npos)
                throw ParameterError("group spec `" + spec + "`: expected g(m,p,n)");
            std::string part = inner.substr(pos, comma - pos);
            try {
                size_t used = 0;
                vals[i] = std::stoi(part, &used);
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::exception&) {
                throw ParameterError("group spec `" + spec + "`: `" + part +
                                     "` is not an integer (expected g(m,p,n))");
            }
            pos = comma + 1;
        }
        return std::make_unique<GmpnSource>(vals[0], vals[1], vals[2], budgets.elements);
    }
    return std::make_unique<CoxeterSource>(parse_coxeter_type(s), budgets.seconds);
}

}  // namespace sperner
