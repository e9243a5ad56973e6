#include "profgen/profile.hpp"

#include <algorithm>
#include <numeric>

#include "profgen/eval.hpp"

namespace profgen {

std::shared_ptr<const SymbolTable> SymbolTable::intern(
    const std::vector<const DisorderSpec*>& disorders) {
    auto t = std::make_shared<SymbolTable>();
    for (const DisorderSpec* d : disorders)
        for (const auto& name : d->domain_order)
            if (!t->index_.count(name)) {
                t->index_.emplace(name, static_cast<std::uint32_t>(t->names_.size()));
                t->names_.push_back(name);
            }
    return t;
}

std::shared_ptr<const SymbolTable> SymbolTable::intern(const DisorderSpec& d) {
    return intern(std::vector<const DisorderSpec*>{&d});
}

std::shared_ptr<const SymbolTable> SymbolTable::intern(const DisorderSpec& a,
                                                       const DisorderSpec& b) {
    return intern(std::vector<const DisorderSpec*>{&a, &b});
}

std::uint32_t SymbolTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownSymptom("unknown symptom '" + name + "'");
    return it->second;
}

Profile Profile::from_set(const SymptomSet& s, const SymbolTable& t) {
    Profile p(static_cast<std::uint32_t>(t.size()));
    for (const auto& name : s) p.set(t.index_of(name));
    return p;
}

SymptomSet Profile::to_set(const SymbolTable& t) const {
    std::vector<std::string> names;
    names.reserve(pop_);
    for (std::uint32_t i = 0; i < bits_; ++i)
        if (test(i)) names.push_back(t.name(i));
    return SymptomSet(std::move(names));
}

bool Profile::canonical_less(const Profile& a, const Profile& b) {
    if (a.pop_ != b.pop_) return a.pop_ < b.pop_;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff) {
            std::uint64_t lowest = diff & (~diff + 1);
            return (a.words_[i] & lowest) != 0;
        }
    }
    return false;
}

ProfileMatrix::ProfileMatrix(std::shared_ptr<const SymbolTable> table,
                             std::string name, bool reduced)
    : table_(std::move(table)),
      name_(std::move(name)),
      reduced_(reduced),
      words_per_row_((table_->size() + 63) / 64) {
    if (words_per_row_ == 0) words_per_row_ = 1;
}

void ProfileMatrix::add_row(const Profile& p) {
    if (p.bits() != table_->size())
        throw TableMismatch("row width does not match matrix table");
    data_.insert(data_.end(), p.words().begin(), p.words().end());
    if (p.words().size() < words_per_row_)
        data_.resize(data_.size() + (words_per_row_ - p.words().size()), 0);
    popcounts_.push_back(p.popcount());
    finalized_ = false;
}

void ProfileMatrix::finalize() {
    const std::size_t n = popcounts_.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto row_less = [&](std::size_t x, std::size_t y) {
        if (popcounts_[x] != popcounts_[y]) return popcounts_[x] < popcounts_[y];
        const std::uint64_t* a = data_.data() + x * words_per_row_;
        const std::uint64_t* b = data_.data() + y * words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) {
            std::uint64_t diff = a[i] ^ b[i];
            if (diff) {
                std::uint64_t lowest = diff & (~diff + 1);
                return (a[i] & lowest) != 0;
            }
        }
        return false;
    };
    auto row_eq = [&](std::size_t x, std::size_t y) {
        const std::uint64_t* a = data_.data() + x * words_per_row_;
        const std::uint64_t* b = data_.data() + y * words_per_row_;
        return std::equal(a, a + words_per_row_, b);
    };
    std::sort(order.begin(), order.end(), row_less);
    order.erase(std::unique(order.begin(), order.end(), row_eq), order.end());

    std::vector<std::uint64_t> new_data;
    new_data.reserve(order.size() * words_per_row_);
    std::vector<std::uint32_t> new_pops;
    new_pops.reserve(order.size());
    for (std::size_t idx : order) {
        const std::uint64_t* src = data_.data() + idx * words_per_row_;
        new_data.insert(new_data.end(), src, src + words_per_row_);
        new_pops.push_back(popcounts_[idx]);
    }
    data_ = std::move(new_data);
    popcounts_ = std::move(new_pops);
    finalized_ = true;
}

Profile ProfileMatrix::row(std::size_t i) const {
    Profile p(static_cast<std::uint32_t>(table_->size()));
    const std::uint64_t* src = row_data(i);
    for (std::size_t w = 0; w < words_per_row_; ++w)
        for (std::uint32_t b = 0; b < 64; ++b) {
            std::uint32_t bit = static_cast<std::uint32_t>(w * 64 + b);
            if (bit >= p.bits()) break;
            if ((src[w] >> b) & 1u) p.set(bit);
        }
    return p;
}

}  // namespace profgen
