#include "ludics/locus.hpp"

#include "ludics/error.hpp"

#include <algorithm>
#include <charconv>

namespace ludics {

bool is_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(s[0]))
        return false;
    return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

Locus::Locus(std::string root, std::vector<std::uint32_t> suffix) : root_(std::move(root)), suffix_(std::move(suffix))
{
    if (!is_identifier(root_))
        throw Error(ErrorCode::Syntax, "invalid locus root '" + root_ + "'");
}

Locus Locus::parse(std::string_view text)
{
    auto dot = text.find('.');
    Locus l(std::string(text.substr(0, dot)));
    while (dot != std::string_view::npos) {
        auto next = text.find('.', dot + 1);
        auto part = text.substr(dot + 1, next == std::string_view::npos ? std::string_view::npos : next - dot - 1);
        std::uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw Error(ErrorCode::Syntax, "invalid locus '" + std::string(text) + "'");
        l.suffix_.push_back(n);
        dot = next;
    }
    return l;
}

Locus Locus::child(std::uint32_t i) const
{
    Locus l = *this;
    l.suffix_.push_back(i);
    return l;
}

std::optional<Locus> Locus::parent() const
{
    if (suffix_.empty())
        return std::nullopt;
    Locus l = *this;
    l.suffix_.pop_back();
    return l;
}

bool Locus::is_prefix_of(const Locus& other) const
{
    return root_ == other.root_ && suffix_.size() <= other.suffix_.size() &&
           std::equal(suffix_.begin(), suffix_.end(), other.suffix_.begin());
}

bool Locus::is_sublocus_of(const Locus& other) const
{
    return other.is_prefix_of(*this) && suffix_.size() > other.suffix_.size();
}

std::string Locus::to_string() const
{
    std::string s = root_;
    for (auto n : suffix_)
        s += "." + std::to_string(n);
    return s;
}

bool disjoint(const Locus& a, const Locus& b)
{
    return !a.is_prefix_of(b) && !b.is_prefix_of(a);
}

} // namespace ludics
