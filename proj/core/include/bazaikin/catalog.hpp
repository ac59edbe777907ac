#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bazaikin/equivalence.hpp"
#include "bazaikin/topology.hpp"

namespace bazaikin {

/// One diffeomorphism class of the census.
struct CatalogRecord {
    CanonicalClass canon;
    std::int64_t p1 = 0;
    std::int64_t s = 0;
    std::int64_t p2 = 0;
    CurvatureClass curvature = CurvatureClass::QuasiPositive;  // best over reps
    bool new_example = false;  // no representative has four entries of one sign
    std::vector<FiveTuple> reps;

    bool operator==(const CatalogRecord&) const = default;
};

/// Full record for one class: invariants, best curvature over the
/// representatives, and the novelty flag (true iff the canonical form has
/// exactly three positive and three negative entries, equivalently no
/// representative lies in the four-same-sign family).
CatalogRecord make_record(const CanonicalClass& c);

/// Every canonical class with p1 <= p1_max, each exactly once, sorted by
/// ascending (p1, canon).  Generation walks descending odd prefixes
/// r1 >= ... >= r5 with sum-of-squares pruning, derives r6 = -sum, keeps
/// canonical sign representatives only, and filters on admissibility of
/// the delete-r6 representative.  Partitions by r1 run independently on
/// `threads` threads; the merge is deterministic, so output bytes do not
/// depend on the thread count.
std::vector<CatalogRecord> enumerate_classes(std::int64_t p1_max, unsigned threads = 0);

struct CensusSummary {
    std::size_t total = 0;
    std::size_t new_qp = 0;
    std::map<CurvatureClass, std::size_t> by_class;
};

CensusSummary summarize_counts(const std::vector<CatalogRecord>& records);

enum class CollisionKey { P1, P1S, P1SP2 };

CollisionKey collision_key_from_string(std::string_view s);  // "p1"|"p1s"|"p1sp2"

/// Groups of >= 2 distinct classes agreeing on the key.  P1S compares
/// (p1, s); P1SP2 additionally compares the residue pair {p2, s - p2}.
/// Groups and their members keep the (p1, canon) order.
std::vector<std::vector<CatalogRecord>> find_collisions(
    const std::vector<CatalogRecord>& records, CollisionKey key);

enum class CatalogFormat { JSONL, CSV };

/// Lossless, byte-stable export.  JSONL: one object per record with keys
/// canon, p1, s, p2, curvature, new_example, reps.  CSV: header
/// `canon;p1;s;p2;curvature;new_example;reps`, canon/reps space-separated,
/// rep groups joined by '|'.
void export_records(const std::vector<CatalogRecord>& records, CatalogFormat format,
                    std::ostream& out);
void export_records(const std::vector<CatalogRecord>& records, CatalogFormat format,
                    const std::string& path);

/// Inverse of export_records for either format (sniffed from the first
/// line).  Validates 2*p1 = sum of squares on ingest; malformed input
/// throws ParseError carrying the 1-based line number.
std::vector<CatalogRecord> load_records(std::istream& in);
std::vector<CatalogRecord> load_records(const std::string& path);

}  // namespace bazaikin
