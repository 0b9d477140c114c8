#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace prefas {

//! A set of rules of one host program, stored as a bitmask over source order.
//!
//! Index i stands for the i-th rule of the host program. The capacity is fixed at 64 rules;
//! every exhaustive analysis in this library works far below that limit.
class RuleSet {
public:
    static constexpr std::size_t kCapacity = 64;

    class Iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type        = std::size_t;
        using difference_type   = std::ptrdiff_t;
        using pointer           = const std::size_t*;
        using reference         = std::size_t;

        constexpr Iterator() = default;
        constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        constexpr Iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr Iterator operator++(int) {
            Iterator t = *this;
            ++*this;
            return t;
        }
        constexpr bool operator==(const Iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr RuleSet() = default;
    constexpr explicit RuleSet(std::uint64_t bits) : bits_(bits) {}
    constexpr RuleSet(std::initializer_list<std::size_t> indices) {
        for (auto i : indices) insert(i);
    }

    //! The set {0, ..., n-1}.
    [[nodiscard]] static constexpr RuleSet first(std::size_t n) {
        return RuleSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    [[nodiscard]] static constexpr RuleSet single(std::size_t i) { return RuleSet(std::uint64_t{1} << i); }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    [[nodiscard]] constexpr bool intersects(RuleSet o) const { return (bits_ & o.bits_) != 0; }
    [[nodiscard]] constexpr bool subset_of(RuleSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

    [[nodiscard]] constexpr Iterator begin() const { return Iterator(bits_); }
    [[nodiscard]] constexpr Iterator end() const { return Iterator(0); }

    constexpr RuleSet& operator|=(RuleSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr RuleSet& operator&=(RuleSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr RuleSet& operator-=(RuleSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr RuleSet operator|(RuleSet a, RuleSet b) { return a |= b; }
    friend constexpr RuleSet operator&(RuleSet a, RuleSet b) { return a &= b; }
    friend constexpr RuleSet operator-(RuleSet a, RuleSet b) { return a -= b; }

    //! Orders by bitmask value.
    friend constexpr auto operator<=>(RuleSet, RuleSet) = default;

private:
    std::uint64_t bits_ = 0;
};

} // namespace prefas
