#pragma once

#include "ludics/locus.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ludics {

/// Gamma |- Delta with at most one locus on the left. Right loci are kept sorted.
class Sequent {
public:
    Sequent() = default;
    Sequent(std::optional<Locus> left, std::vector<Locus> right);

    static Sequent positive(std::vector<Locus> right) { return Sequent(std::nullopt, std::move(right)); }
    static Sequent negative(Locus left, std::vector<Locus> right = {})
    {
        return Sequent(std::move(left), std::move(right));
    }

    const std::optional<Locus>& left() const { return left_; }
    const std::vector<Locus>& right() const { return right_; }
    bool is_positive() const { return !left_.has_value(); }
    bool contains_right(const Locus& l) const;
    std::vector<Locus> loci() const;

    std::string to_string() const;

    friend auto operator<=>(const Sequent&, const Sequent&) = default;
    friend bool operator==(const Sequent&, const Sequent&) = default;

private:
    std::optional<Locus> left_;
    std::vector<Locus> right_;
};

/// Throws Error(InvalidBase) unless the loci are pairwise disjoint and the
/// sequent is not empty on both sides.
void validate_sequent(const Sequent& s);

/// Nonempty set of sequents, kept sorted.
class NetBase {
public:
    NetBase() = default;
    explicit NetBase(std::vector<Sequent> sequents);
    NetBase(Sequent single) : NetBase(std::vector<Sequent>{std::move(single)}) {}

    const std::vector<Sequent>& sequents() const { return sequents_; }
    std::size_t size() const { return sequents_.size(); }
    const Sequent& operator[](std::size_t i) const { return sequents_[i]; }

    bool all_negative() const;
    std::optional<std::size_t> positive_index() const;

    std::string to_string() const;

    friend auto operator<=>(const NetBase&, const NetBase&) = default;
    friend bool operator==(const NetBase&, const NetBase&) = default;

private:
    std::vector<Sequent> sequents_;
};

/// Throws Error(InvalidBase) unless nonempty, with at most one positive
/// sequent and pairwise disjoint loci overall.
void validate_netbase(const NetBase& b);

/// The base of the counter-part of an interaction. A single sequent
/// xi |- s1..sn becomes {|- xi, s1 |-, ..., sn |-}; a base with several
/// sequents is merged back into one sequent. The map is an involution.
NetBase dual_base(const NetBase& b);

} // namespace ludics
