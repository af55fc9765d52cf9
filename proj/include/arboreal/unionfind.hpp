#pragma once

#include <numeric>
#include <vector>

namespace arboreal {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        return true;
    }

    int components()
    {
        int c = 0;
        for (int x = 0; x < static_cast<int>(parent_.size()); ++x)
            if (find(x) == x)
                ++c;
        return c;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

} // namespace arboreal
