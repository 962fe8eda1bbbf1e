#pragma once

#include <utility>

#include "trispin/errors.hpp"

namespace trispin {

struct Site {
    int i = 0;
    int j = 0;
    bool operator==(const Site&) const = default;
};

// Triangular domain {(i,j): i,j >= 0, i+j <= N} with a fixed linear
// enumeration of its (N+1)(N+2)/2 sites.  Ordering is j-major: all
// sites of row j=0 by increasing i, then row j=1, etc.  The eigenvalue
// labels (s,t) live on the same domain and use the same enumeration.
class TriangularLattice {
public:
    explicit TriangularLattice(int order) : n_(order) {
        if (order < 0) throw OutOfDomain("lattice order must be non-negative");
    }

    int order() const { return n_; }
    int dim() const { return (n_ + 1) * (n_ + 2) / 2; }

    bool contains(int i, int j) const {
        return i >= 0 && j >= 0 && i + j <= n_;
    }

    int site_to_index(int i, int j) const {
        if (!contains(i, j))
            throw OutOfDomain("site (" + std::to_string(i) + "," + std::to_string(j)
                              + ") outside triangle of order " + std::to_string(n_));
        // row j starts after rows 0..j-1, which hold (N+1) + N + ... + (N-j+2) sites
        return j * (n_ + 1) - j * (j - 1) / 2 + i;
    }

    Site index_to_site(int idx) const {
        if (idx < 0 || idx >= dim())
            throw OutOfDomain("index " + std::to_string(idx) + " outside [0,"
                              + std::to_string(dim()) + ")");
        int j = 0;
        int row_start = 0;
        while (row_start + (n_ - j + 1) <= idx) {
            row_start += n_ - j + 1;
            ++j;
        }
        return Site{idx - row_start, j};
    }

private:
    int n_;
};

} // namespace trispin
