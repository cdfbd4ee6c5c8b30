#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathpoly/oracle.hpp"
#include "pathpoly/tree.hpp"

namespace pathpoly {

struct CertifyOptions {
  OracleCaps caps;
  // Corrupts one closed-form constraint per tree so a harness can prove
  // that mismatches are detected and reported. Never for real runs.
  bool inject_defect = false;
};

struct TreeReport {
  std::string label;  // edge names, space separated
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t dim = 0;
  std::size_t facet_count = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/** Runs every check on one tree: path vectors are extreme, the dimension
    law, closed-form constraints versus the enumeration oracle, descriptor
    tight sets, the degree-3 exclusion, and the fiber-product identity for
    every internal-edge split. error(errc::cap_exceeded) propagates; any
    other defect becomes a failure line. */
TreeReport certify_tree(const Tree& tree, const CertifyOptions& options = {});

/** certify_tree over every tree shape with 1..max_edges edges. */
std::vector<TreeReport> certify_all(std::size_t max_edges,
                                    const CertifyOptions& options = {});

bool all_ok(const std::vector<TreeReport>& reports);

/** Summary table, failure details, verdict line. */
std::string render_reports(const std::vector<TreeReport>& reports);

}  // namespace pathpoly
