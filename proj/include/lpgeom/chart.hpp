#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpg {

/// A coordinate chart: ordered coordinate variables (which carry
/// differentials) followed by optional constant parameters (scalar symbols
/// with no differential; d treats them as constants). Symbol indices run over
/// variables first, then parameters. Immutable after construction.
class Chart {
public:
    Chart(std::string name, std::vector<std::string> variables, std::vector<std::string> parameters = {});

    const std::string& name() const noexcept { return name_; }
    std::span<const std::string> variables() const noexcept { return variables_; }
    std::span<const std::string> parameters() const noexcept { return parameters_; }

    std::size_t dimension() const noexcept { return variables_.size(); }
    std::size_t symbol_count() const noexcept { return variables_.size() + parameters_.size(); }
    const std::string& symbol(std::size_t index) const;
    bool is_variable(std::size_t index) const noexcept { return index < variables_.size(); }

    std::optional<std::size_t> index_of(std::string_view symbol) const noexcept;
    // Throws UnknownSymbol.
    std::size_t require(std::string_view symbol) const;

    friend bool operator==(const Chart& a, const Chart& b) noexcept {
        return a.name_ == b.name_ && a.variables_ == b.variables_ && a.parameters_ == b.parameters_;
    }

private:
    std::string name_;
    std::vector<std::string> variables_;
    std::vector<std::string> parameters_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::string name, std::vector<std::string> variables,
                    std::vector<std::string> parameters = {});

bool is_identifier(std::string_view text) noexcept;

// Pointer identity or structural equality.
bool same_chart(const ChartPtr& a, const ChartPtr& b) noexcept;

} // namespace lpg
