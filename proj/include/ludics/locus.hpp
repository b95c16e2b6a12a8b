#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ludics {

/// An address: a named root followed by a sequence of naturals, written `xi.1.0`.
class Locus {
public:
    Locus() = default;
    explicit Locus(std::string root, std::vector<std::uint32_t> suffix = {});

    /// Parses the canonical text form; throws Error(Syntax) on malformed input.
    static Locus parse(std::string_view text);

    const std::string& root() const { return root_; }
    const std::vector<std::uint32_t>& suffix() const { return suffix_; }

    Locus child(std::uint32_t i) const;
    std::optional<Locus> parent() const;

    /// Non-strict prefix test (same root, suffix prefix).
    bool is_prefix_of(const Locus& other) const;
    /// Strict sublocus: `this` lies strictly below `other`.
    bool is_sublocus_of(const Locus& other) const;

    std::string to_string() const;

    friend auto operator<=>(const Locus&, const Locus&) = default;
    friend bool operator==(const Locus&, const Locus&) = default;

private:
    std::string root_;
    std::vector<std::uint32_t> suffix_;
};

/// Two loci are disjoint when neither is a prefix of the other.
bool disjoint(const Locus& a, const Locus& b);

bool is_identifier(std::string_view s);

} // namespace ludics
