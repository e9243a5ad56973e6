#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace profgen {

// An immutable set of symptom names. Elements are kept sorted and unique so
// equality and ordering are well defined regardless of construction order.
class SymptomSet {
public:
    SymptomSet() = default;

    explicit SymptomSet(std::vector<std::string> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    SymptomSet(std::initializer_list<std::string> elems)
        : SymptomSet(std::vector<std::string>(elems)) {}

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool contains(const std::string& s) const {
        return std::binary_search(elems_.begin(), elems_.end(), s);
    }

    bool contains_all(const SymptomSet& other) const {
        return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                             other.elems_.end());
    }

    bool intersects(const SymptomSet& other) const {
        auto a = elems_.begin();
        auto b = other.elems_.begin();
        while (a != elems_.end() && b != other.elems_.end()) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else
                return true;
        }
        return false;
    }

    SymptomSet unified(const SymptomSet& other) const {
        std::vector<std::string> out;
        out.reserve(elems_.size() + other.elems_.size());
        std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                       other.elems_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    SymptomSet intersected(const SymptomSet& other) const {
        std::vector<std::string> out;
        std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                              other.elems_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    SymptomSet minus(const SymptomSet& other) const {
        std::vector<std::string> out;
        std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                            other.elems_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    const std::vector<std::string>& elements() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const SymptomSet&) const = default;
    auto operator<=>(const SymptomSet&) const = default;

    // Graded-lexicographic order: smaller sets first, ties broken by the
    // sorted element sequence. Used for all serialized profile listings.
    static bool graded_less(const SymptomSet& a, const SymptomSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elems_ < b.elems_;
    }

private:
    static SymptomSet from_sorted(std::vector<std::string> elems) {
        SymptomSet s;
        s.elems_ = std::move(elems);
        return s;
    }

    std::vector<std::string> elems_;
};

}  // namespace profgen
