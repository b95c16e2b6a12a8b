#include "ludics/base.hpp"

#include "ludics/error.hpp"

#include <algorithm>

namespace ludics {

Sequent::Sequent(std::optional<Locus> left, std::vector<Locus> right) : left_(std::move(left)), right_(std::move(right))
{
    std::sort(right_.begin(), right_.end());
}

bool Sequent::contains_right(const Locus& l) const
{
    return std::binary_search(right_.begin(), right_.end(), l);
}

std::vector<Locus> Sequent::loci() const
{
    std::vector<Locus> out;
    if (left_)
        out.push_back(*left_);
    out.insert(out.end(), right_.begin(), right_.end());
    return out;
}

std::string Sequent::to_string() const
{
    std::string s;
    if (left_)
        s += left_->to_string() + " ";
    s += "|-";
    for (std::size_t i = 0; i < right_.size(); ++i)
        s += (i ? ", " : " ") + right_[i].to_string();
    return s;
}

namespace {

void require_disjoint(const std::vector<Locus>& loci, const std::string& where)
{
    for (std::size_t i = 0; i < loci.size(); ++i)
        for (std::size_t j = i + 1; j < loci.size(); ++j)
            if (!disjoint(loci[i], loci[j]))
                throw Error(ErrorCode::InvalidBase,
                            "loci " + loci[i].to_string() + " and " + loci[j].to_string() + " overlap in " + where);
}

} // namespace

void validate_sequent(const Sequent& s)
{
    if (!s.left() && s.right().empty())
        throw Error(ErrorCode::InvalidBase, "empty sequent |-");
    require_disjoint(s.loci(), s.to_string());
}

NetBase::NetBase(std::vector<Sequent> sequents) : sequents_(std::move(sequents))
{
    std::sort(sequents_.begin(), sequents_.end());
}

bool NetBase::all_negative() const
{
    return !positive_index().has_value();
}

std::optional<std::size_t> NetBase::positive_index() const
{
    for (std::size_t i = 0; i < sequents_.size(); ++i)
        if (sequents_[i].is_positive())
            return i;
    return std::nullopt;
}

std::string NetBase::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < sequents_.size(); ++i)
        s += (i ? "; " : "") + sequents_[i].to_string();
    return s + "}";
}

void validate_netbase(const NetBase& b)
{
    if (b.size() == 0)
        throw Error(ErrorCode::InvalidBase, "empty net base");
    std::size_t positives = 0;
    std::vector<Locus> all;
    for (const auto& s : b.sequents()) {
        validate_sequent(s);
        positives += s.is_positive();
        auto l = s.loci();
        all.insert(all.end(), l.begin(), l.end());
    }
    if (positives > 1)
        throw Error(ErrorCode::InvalidBase, "more than one positive sequent in " + b.to_string());
    require_disjoint(all, b.to_string());
}

NetBase dual_base(const NetBase& b)
{
    if (b.size() == 1) {
        const auto& s = b[0];
        std::vector<Sequent> out;
        if (s.left())
            out.push_back(Sequent::positive({*s.left()}));
        for (const auto& d : s.right())
            out.push_back(Sequent::negative(d));
        return NetBase(std::move(out));
    }
    std::vector<Locus> left, right;
    for (const auto& s : b.sequents()) {
        left.insert(left.end(), s.right().begin(), s.right().end());
        if (s.left())
            right.push_back(*s.left());
    }
    if (left.size() > 1)
        throw Error(ErrorCode::InvalidBase, "no single-sequent dual for " + b.to_string());
    std::optional<Locus> l;
    if (!left.empty())
        l = left.front();
    return NetBase(Sequent(l, right));
}

} // namespace ludics
