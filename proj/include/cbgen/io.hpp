#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbgen/assignment.hpp"
#include "cbgen/config.hpp"
#include "cbgen/edge_set.hpp"

namespace cbgen {

// "u TAB v" per line, 1-based, u < v, sorted; returns the edge count.
std::uint64_t write_edge_list(const EdgeList& edges, std::ostream& out);

// One value per line.
void write_sequence(const std::vector<std::uint32_t>& values, std::ostream& out);

// "vertex TAB community" per line, both 1-based, vertices ascending.
void write_partition(const Assignment& assignment, std::ostream& out);

// Readers throw ParseError naming `what` and the offending line.
std::vector<std::uint32_t> read_sequence(std::istream& in, const std::string& what);

// Loops and self-referential lines are rejected; 1-based input becomes
// 0-based edges with background provenance.
EdgeList read_edge_list(std::istream& in, const std::string& what);

// Expects vertex ids 1..n in order; fills community_of and members, with
// per-member unit volumes (callers with degree data overwrite volumes).
Assignment read_partition(std::istream& in, const std::string& what);

}  // namespace cbgen
