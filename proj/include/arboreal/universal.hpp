#pragma once

#include "arboreal/complex.hpp"
#include "arboreal/group.hpp"

#include <vector>

namespace arboreal {

// The ball of radius n around the base cell T of the arboreal complex T_{d,k}.
struct Ball {
    MComplex complex;
    int radius = 0;
    std::vector<Word> cellWords; // top cell index -> reduced word g with cell = g.T
    Exemptions boundary;         // [i][wall index]: wall of degree below k
};

// Inductive attachment: each free wall of the last layer receives k-1 new top cells, each with a
// fresh vertex carrying the color missing from the wall.
Ball buildBall(const Params& p, int radius);

// Top cells are reduced words of length <= radius; a cell of color set J is the coset K g of the
// subgroup generated by the generators outside J.
Ball ballFromCosets(const Params& p, int radius);

// Breadth-first distances between top cells, adjacency through shared walls.
std::vector<int> dualDistances(const MComplex& X, int source);

// The non-backtracking path from `from` to `to` (cells after `from`, ending at `to`).
// Throws DomainError when the path leaves the ball.
std::vector<int> uniqueNonBacktracking(const Ball& b, int from, int to);

// Index of the top cell carrying a reduced word, or -1.
int cellOfWord(const Ball& b, const Word& w);

} // namespace arboreal
