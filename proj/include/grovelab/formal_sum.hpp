#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyring.hpp"

namespace grovelab {

/// Integer combination over a finite index set. Keys need operator< and to_string().
template <class Key>
class FormalSum {
public:
    using Map = std::map<Key, Int>;

    FormalSum() = default;
    FormalSum(const Key& k, const Int& c = 1) { add(k, c); }

    void add(const Key& k, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = m_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) m_.erase(it);
        }
    }
    FormalSum& operator+=(const FormalSum& o) {
        for (auto& [k, c] : o.m_) add(k, c);
        return *this;
    }
    FormalSum& operator*=(const Int& s) {
        if (s == 0) m_.clear();
        else
            for (auto& [k, c] : m_) c *= s;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator*(FormalSum a, const Int& s) { return a *= s; }
    bool operator==(const FormalSum& o) const { return m_ == o.m_; }

    Int coeff(const Key& k) const {
        auto it = m_.find(k);
        return it == m_.end() ? Int(0) : it->second;
    }
    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }

    /// Terms sorted by key string; coefficient 1 elided.
    std::string to_string() const {
        if (m_.empty()) return "0";
        std::vector<std::pair<std::string, Int>> items;
        for (auto& [k, c] : m_) items.emplace_back(key_string(k), c);
        std::sort(items.begin(), items.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::string s;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) s += " + ";
            if (items[i].second != 1) s += items[i].second.get_str() + "·";
            s += "(" + items[i].first + ")";
        }
        return s;
    }

private:
    static std::string key_string(const Key& k) { return k.to_string(); }
    Map m_;
};

} // namespace grovelab
