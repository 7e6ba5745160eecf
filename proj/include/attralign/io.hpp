#pragma once

#include <string>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

// Edge list: one edge per line, "i j [w]", separated by whitespace or commas,
// '#' starts a comment line. Missing weight defaults to 1.0; N = 1 + max node
// id; duplicate edges collapse to the last weight seen.
Graph load_edge_list(const std::string& path);

// Writes "i j w" lines (i < j) preceded by optional '#' comment lines.
void save_edge_list(const Graph& g, const std::string& path,
                    const std::vector<std::string>& comments = {});

// Attribute CSV: comma-separated numeric rows, row order = node order. A first
// row whose cells are all non-numeric is treated as a header and skipped.
AttributeMatrix load_attributes(const std::string& path);

void save_attributes(const AttributeMatrix& x, const std::string& path);

// Partition file: one integer label per line; n_classes = 1 + max label.
Partition load_partition(const std::string& path);

void save_partition(const Partition& z, const std::string& path);

}  // namespace attralign
