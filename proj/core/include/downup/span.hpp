#pragma once

#include "downup/scalar.hpp"

#include <cstddef>
#include <map>

namespace downup {

// Incremental row-echelon basis of a subspace of K^(Key), vectors given as
// sparse maps. Each stored row has its smallest key as pivot with
// coefficient 1.
template <class Key>
class LinearSpan {
public:
    using Vector = std::map<Key, Scalar>;

    // Adds v; returns false when v was already in the span.
    bool insert(Vector v)
    {
        v = reduce(std::move(v));
        if (v.empty())
            return false;
        const Scalar inv = v.begin()->second.inverse();
        for (auto& [k, c] : v)
            c *= inv;
        const Key pivot = v.begin()->first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(Vector v) const { return reduce(std::move(v)).empty(); }

    std::size_t rank() const { return rows_.size(); }

private:
    Vector reduce(Vector v) const
    {
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const Key key = it->first;
            const Scalar factor = it->second;
            // every other key of the row is larger than its pivot
            for (const auto& [k, c] : row->second) {
                auto [pos, inserted] = v.try_emplace(k, -(factor * c));
                if (!inserted) {
                    pos->second -= factor * c;
                    if (pos->second.is_zero())
                        v.erase(pos);
                }
            }
            it = v.upper_bound(key);
        }
        return v;
    }

    std::map<Key, Vector> rows_;
};

} // namespace downup
