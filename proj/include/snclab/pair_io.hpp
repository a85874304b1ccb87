#ifndef SNCLAB_PAIR_IO_HPP
#define SNCLAB_PAIR_IO_HPP

#include "snclab/digraph_pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace snclab {

/**
 * The serialized instance format: UTF-8 JSON with 1-based vertex labels, so
 * files read like the published tables. Loops appear explicitly in the
 * adjacency lists; nothing is implicit.
 *
 *   {
 *     "n": 3,
 *     "a": [[1, 2], [2], [1, 3]],
 *     "b": [[1], [2, 3], [3]],
 *     "weights": ["7", "1/3", "0"],   // optional, non-negative rationals
 *     "labels": ["x", "y", "z"]       // optional, cosmetic
 *   }
 */
struct PairDocument {
    Eigen::Index n = 0;
    std::vector<std::vector<Eigen::Index>> a; ///< 1-based, sorted ascending
    std::vector<std::vector<Eigen::Index>> b;
    std::optional<std::vector<std::string>> weights;
    std::optional<std::vector<std::string>> labels;
};

bool operator==(const PairDocument & x, const PairDocument & y);

/// Throws ParseError with a document path (e.g. "a[2][3]") on anything
/// malformed: labels outside 1..n, duplicates, negative weights, unknown
/// keys, wrong JSON types.
PairDocument parse_pair_document(const std::string & text);

/// Canonical form: stable key order, sorted adjacency lists, rationals as
/// "p" or "p/q". parse(serialize(d)) == d.
std::string serialize_pair_document(const PairDocument & doc);

DigraphPair document_to_pair(const PairDocument & doc);

/// The document's weights as exact rationals; all ones when absent.
WeightVector document_weights(const PairDocument & doc);

PairDocument make_document(const DigraphPair & p, const WeightVector * weights = nullptr,
    const std::vector<std::string> * labels = nullptr);

} // namespace snclab

#endif
