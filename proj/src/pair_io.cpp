#include "snclab/pair_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace snclab {

using Json = nlohmann::ordered_json;

bool operator==(const PairDocument & x, const PairDocument & y)
{
    return x.n == y.n && x.a == y.a && x.b == y.b && x.weights == y.weights &&
        x.labels == y.labels;
}

namespace {
    std::vector<std::vector<Eigen::Index>> parse_adjacency(const Json & j, const std::string & key,
        Eigen::Index n)
    {
        if (! j.is_array())
            throw ParseError(key, "expected an array of adjacency lists");
        if (std::ssize(j) != n)
            throw ParseError(key, "expected " + std::to_string(n) + " adjacency lists, got " +
                std::to_string(j.size()));

        std::vector<std::vector<Eigen::Index>> rows;
        rows.reserve(n);
        for (Eigen::Index v = 0; v < n; ++v) {
            const Json & row = j[v];
            const std::string where = key + "[" + std::to_string(v) + "]";
            if (! row.is_array())
                throw ParseError(where, "expected an array of vertex labels");
            std::vector<Eigen::Index> out;
            std::set<Eigen::Index> seen;
            for (Eigen::Index i = 0; i < std::ssize(row); ++i) {
                const Json & entry = row[i];
                const std::string at = where + "[" + std::to_string(i) + "]";
                if (! entry.is_number_integer())
                    throw ParseError(at, "expected an integer vertex label");
                const auto label = entry.get<std::int64_t>();
                if (label < 1 || label > n)
                    throw ParseError(at, "vertex label " + std::to_string(label) +
                        " out of range 1.." + std::to_string(n));
                if (! seen.insert(label).second)
                    throw ParseError(at, "duplicate vertex label " + std::to_string(label));
                out.push_back(label);
            }
            std::sort(out.begin(), out.end());
            rows.push_back(std::move(out));
        }
        return rows;
    }

    std::vector<std::string> parse_string_list(const Json & j, const std::string & key,
        Eigen::Index n)
    {
        if (! j.is_array() || std::ssize(j) != n)
            throw ParseError(key, "expected an array of " + std::to_string(n) + " strings");
        std::vector<std::string> out;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (! j[i].is_string())
                throw ParseError(key + "[" + std::to_string(i) + "]", "expected a string");
            out.push_back(j[i].get<std::string>());
        }
        return out;
    }
}

PairDocument parse_pair_document(const std::string & text)
{
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const Json::parse_error & e) {
        throw ParseError("", e.what());
    }
    if (! j.is_object())
        throw ParseError("", "expected a JSON object");

    for (const auto & [key, value] : j.items())
        if (key != "n" && key != "a" && key != "b" && key != "weights" && key != "labels")
            throw ParseError(key, "unknown key");

    if (! j.contains("n") || ! j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
        throw ParseError("n", "expected a non-negative integer vertex count");
    const auto n = static_cast<Eigen::Index>(j["n"].get<std::int64_t>());

    if (! j.contains("a") || ! j.contains("b"))
        throw ParseError("", "both \"a\" and \"b\" adjacency lists are required");

    PairDocument doc;
    doc.n = n;
    doc.a = parse_adjacency(j["a"], "a", n);
    doc.b = parse_adjacency(j["b"], "b", n);

    if (j.contains("weights")) {
        auto raw = parse_string_list(j["weights"], "weights", n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const std::string where = "weights[" + std::to_string(i) + "]";
            Rational w;
            try {
                w = parse_rational(raw[i]);
            }
            catch (const ParseError & e) {
                throw ParseError(where, e.what());
            }
            if (w < 0)
                throw ParseError(where, "negative weight " + raw[i]);
            raw[i] = to_string(w); // canonical form
        }
        doc.weights = std::move(raw);
    }
    if (j.contains("labels"))
        doc.labels = parse_string_list(j["labels"], "labels", n);
    return doc;
}

std::string serialize_pair_document(const PairDocument & doc)
{
    Json j;
    j["n"] = doc.n;
    j["a"] = doc.a;
    j["b"] = doc.b;
    if (doc.weights)
        j["weights"] = *doc.weights;
    if (doc.labels)
        j["labels"] = *doc.labels;
    return j.dump(2) + "\n";
}

DigraphPair document_to_pair(const PairDocument & doc)
{
    Relation a(doc.n), b(doc.n);
    for (Eigen::Index v = 0; v < doc.n; ++v) {
        for (Eigen::Index u : doc.a[v])
            a.add(v, u - 1);
        for (Eigen::Index u : doc.b[v])
            b.add(v, u - 1);
    }
    return DigraphPair(std::move(a), std::move(b));
}

WeightVector document_weights(const PairDocument & doc)
{
    if (! doc.weights)
        return uniform_weights(doc.n);
    WeightVector w(doc.n);
    for (Eigen::Index v = 0; v < doc.n; ++v)
        w(v) = parse_rational((*doc.weights)[v]);
    return w;
}

PairDocument make_document(const DigraphPair & p, const WeightVector * weights,
    const std::vector<std::string> * labels)
{
    PairDocument doc;
    doc.n = p.size();
    auto rows = [&](const Relation & r) {
        std::vector<std::vector<Eigen::Index>> lists(r.size());
        for (auto [u, v] : r.edges())
            lists[u].push_back(v + 1);
        return lists;
    };
    doc.a = rows(p.a);
    doc.b = rows(p.b);
    if (weights) {
        require_weights(*weights, p.size());
        std::vector<std::string> ws;
        for (Eigen::Index v = 0; v < weights->size(); ++v)
            ws.push_back(to_string((*weights)(v)));
        doc.weights = std::move(ws);
    }
    if (labels) {
        if (std::ssize(*labels) != p.size())
            throw DimensionError("make_document: wrong number of labels");
        doc.labels = *labels;
    }
    return doc;
}

} // namespace snclab
