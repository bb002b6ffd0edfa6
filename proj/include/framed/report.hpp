#pragma once

#include <string>
#include <utility>
#include <vector>

#include "framed/chain_homology.hpp"
#include "framed/classification.hpp"
#include "framed/euler_calculus.hpp"
#include "framed/framed_links.hpp"

namespace framed {

// Ordered key=value fields.
using Record = std::vector<std::pair<std::string, std::string>>;

// Output of one command: machine-readable records plus a human summary.
struct Report {
  std::vector<Record> records;
  std::vector<std::string> text;

  // One key=value per line, records in order.
  std::string as_record() const;
  std::string as_text() const;
};

// Canonical coordinates as "a1,a2,.../t:u1,u2,...". A group without free part
// prints its free part as "0"; the torsion suffix is omitted when the group
// has no torsion.
std::string format_alpha(const HomologyClass& alpha);
// Inverse of format_alpha. Missing torsion coordinates default to zero.
// Throws FormatError on malformed text or wrong coordinate counts.
HomologyClass parse_alpha(const std::string& text, const HomologyGroup& group);

IntegerVector parse_integer_list(const std::string& csv);

Report homology_report(const ManifoldPresentation& p, std::size_t degree, bool list_edges);
Report classify_report(const ClassificationTable& table, long bound);
Report fiber_report(const HomologyClass& alpha);
Report torus_report(const TorusTuple& t);
Report theorem2_report(const Theorem2Input& input);
Report euler_report(const ImmersedSurfaceData& s);
Report cobordant_report(const FramedLinkClass& a, const FramedLinkClass& b);
Report replay_report(const ReplayReport& r, bool trace);

}  // namespace framed
