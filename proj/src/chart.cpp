#include "lpgeom/chart.hpp"

#include "lpgeom/error.hpp"

#include <cctype>
#include <set>

namespace lpg {

bool is_identifier(std::string_view text) noexcept {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    for (char c : text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Chart::Chart(std::string name, std::vector<std::string> variables, std::vector<std::string> parameters)
    : name_(std::move(name)), variables_(std::move(variables)), parameters_(std::move(parameters)) {
    std::set<std::string_view> seen;
    auto check = [&](const std::string& s) {
        if (!is_identifier(s))
            throw Error(ErrorKind::InvalidArgument, "chart '" + name_ + "': invalid symbol name '" + s + "'");
        if (s == "d")
            throw Error(ErrorKind::InvalidArgument, "chart '" + name_ + "': 'd' is reserved for the exterior derivative");
        if (!seen.insert(s).second)
            throw Error(ErrorKind::InvalidArgument, "chart '" + name_ + "': duplicate symbol '" + s + "'");
    };
    for (const auto& v : variables_) check(v);
    for (const auto& p : parameters_) check(p);
}

const std::string& Chart::symbol(std::size_t index) const {
    if (index < variables_.size()) return variables_[index];
    if (index < symbol_count()) return parameters_[index - variables_.size()];
    throw Error(ErrorKind::InvalidArgument, "symbol index out of range for chart '" + name_ + "'");
}

std::optional<std::size_t> Chart::index_of(std::string_view symbol) const noexcept {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == symbol) return i;
    for (std::size_t i = 0; i < parameters_.size(); ++i)
        if (parameters_[i] == symbol) return variables_.size() + i;
    return std::nullopt;
}

std::size_t Chart::require(std::string_view symbol) const {
    if (auto i = index_of(symbol)) return *i;
    throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + std::string(symbol) + "' on chart '" + name_ + "'");
}

ChartPtr make_chart(std::string name, std::vector<std::string> variables, std::vector<std::string> parameters) {
    return std::make_shared<const Chart>(std::move(name), std::move(variables), std::move(parameters));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace lpg
