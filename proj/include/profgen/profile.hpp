#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "profgen/errors.hpp"
#include "profgen/generator.hpp"
#include "profgen/symptom_set.hpp"

namespace profgen {

// Frozen mapping from symptom names to dense column indices. Two disorders
// compared together must share one table built over the union of their
// domains.
class SymbolTable {
public:
    static std::shared_ptr<const SymbolTable> intern(
        const std::vector<const DisorderSpec*>& disorders);
    static std::shared_ptr<const SymbolTable> intern(const DisorderSpec& d);
    static std::shared_ptr<const SymbolTable> intern(const DisorderSpec& a,
                                                     const DisorderSpec& b);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::uint32_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::uint32_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

// A fixed-width bit vector over a symbol table; popcount cached.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::uint32_t bits)
        : words_((bits + 63) / 64, 0), bits_(bits) {}

    static Profile from_set(const SymptomSet& s, const SymbolTable& t);

    std::uint32_t bits() const { return bits_; }
    std::uint32_t popcount() const { return pop_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool test(std::uint32_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::uint32_t i) {
        std::uint64_t& w = words_[i / 64];
        std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (!(w & bit)) {
            w |= bit;
            ++pop_;
        }
    }

    void or_with(const Profile& other) {
        check_width(other);
        pop_ = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
            pop_ += static_cast<std::uint32_t>(std::popcount(words_[i]));
        }
    }

    std::uint32_t and_popcount(const Profile& other) const {
        check_width(other);
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::uint32_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    SymptomSet to_set(const SymbolTable& t) const;

    bool operator==(const Profile&) const = default;

    // Canonical row order: by popcount, then by ascending column-index
    // sequence (the row whose lowest differing bit is set comes first).
    static bool canonical_less(const Profile& a, const Profile& b);

private:
    void check_width(const Profile& other) const {
        if (bits_ != other.bits_)
            throw TableMismatch("profile width mismatch: " + std::to_string(bits_) +
                                " vs " + std::to_string(other.bits_));
    }

    std::vector<std::uint64_t> words_;
    std::uint32_t bits_ = 0;
    std::uint32_t pop_ = 0;
};

// Ordered, duplicate-free sequence of profiles over one table (the AP
// representation). Rows are stored flat for kernel-friendly scans.
class ProfileMatrix {
public:
    ProfileMatrix(std::shared_ptr<const SymbolTable> table, std::string name,
                  bool reduced = false);

    void add_row(const Profile& p);
    // Sorts rows canonically and drops duplicates. Must be called once after
    // the last add_row; accessors below require a finalized matrix.
    void finalize();

    std::size_t rows() const { return popcounts_.size(); }
    std::size_t words_per_row() const { return words_per_row_; }
    const std::uint64_t* row_data(std::size_t i) const {
        return data_.data() + i * words_per_row_;
    }
    const std::uint64_t* data() const { return data_.data(); }
    std::uint32_t row_popcount(std::size_t i) const { return popcounts_[i]; }
    Profile row(std::size_t i) const;

    const SymbolTable& table() const { return *table_; }
    std::shared_ptr<const SymbolTable> table_ptr() const { return table_; }
    const std::string& name() const { return name_; }
    bool reduced() const { return reduced_; }

private:
    std::shared_ptr<const SymbolTable> table_;
    std::string name_;
    bool reduced_ = false;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
    std::vector<std::uint32_t> popcounts_;
    bool finalized_ = false;
};

}  // namespace profgen
