#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sumkit/errors.hpp"
#include "sumkit/linalg.hpp"
#include "sumkit/rng.hpp"
#include "sumkit/wordlists.hpp"

namespace sumkit {

struct SparseEntry {
    int dim = 0;
    double value = 0.0;
};

// Sorted by dimension, no explicit zeros.
struct SparseVector {
    std::vector<SparseEntry> items;

    double l2_norm() const {
        double s = 0.0;
        for (const auto& e : items) s += e.value * e.value;
        return std::sqrt(s);
    }
};

namespace detail {

inline bool is_token_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c >= 0x80; // keep multi-byte UTF-8 sequences intact
}

} // namespace detail

// Lowercases and splits on non-alphanumeric characters, keeping hyphens and
// apostrophes that sit between alphanumerics ("co-operation", "don't").
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (detail::is_token_byte(c)) {
            current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                                   : static_cast<char>(c));
        } else if ((c == '-' || c == '\'') && !current.empty() && i + 1 < text.size() &&
                   detail::is_token_byte(static_cast<unsigned char>(text[i + 1]))) {
            current.push_back(static_cast<char>(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

struct Vocabulary {
    std::unordered_map<std::string, int> term_to_id;
    std::vector<std::string> id_to_term;
    std::vector<int> document_frequency;
    int n_documents = 0;

    int size() const { return static_cast<int>(id_to_term.size()); }

    int id_of(const std::string& term) const {
        auto it = term_to_id.find(term);
        return it == term_to_id.end() ? -1 : it->second;
    }

    uint64_t fingerprint() const {
        uint64_t h = fnv1a64("vocab");
        for (const auto& t : id_to_term) {
            h = fnv1a64(t, h);
            h = fnv1a64("\n", h);
        }
        uint64_t n = static_cast<uint64_t>(n_documents);
        h = fnv1a64(&n, sizeof(n), h);
        return h;
    }
};

// Terms get dense ids in lexicographic order so rebuilding from the same
// corpus reproduces the exact id assignment.
inline Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& documents,
                                   int min_df = 2,
                                   const std::unordered_set<std::string>& stopwords =
                                       english_stopwords()) {
    if (documents.empty()) throw EmptyCorpusError("build_vocabulary: empty corpus");
    std::map<std::string, int> df;
    std::unordered_set<std::string> seen;
    for (const auto& doc : documents) {
        seen.clear();
        for (const auto& tok : doc) {
            if (stopwords.count(tok) || !seen.insert(tok).second) continue;
            ++df[tok];
        }
    }
    Vocabulary vocab;
    vocab.n_documents = static_cast<int>(documents.size());
    for (const auto& [term, count] : df) {
        if (count < min_df) continue;
        vocab.term_to_id.emplace(term, static_cast<int>(vocab.id_to_term.size()));
        vocab.id_to_term.push_back(term);
        vocab.document_frequency.push_back(count);
    }
    return vocab;
}

// tf * idf with idf = ln((1+N)/(1+df)) + 1, L2-normalized. Out-of-vocabulary
// tokens are ignored; an all-OOV input yields the empty vector.
inline SparseVector tfidf_vectorize(const std::vector<std::string>& tokens,
                                    const Vocabulary& vocab) {
    std::map<int, int> counts;
    for (const auto& tok : tokens) {
        const int id = vocab.id_of(tok);
        if (id >= 0) ++counts[id];
    }
    SparseVector out;
    out.items.reserve(counts.size());
    double sq = 0.0;
    for (const auto& [id, tf] : counts) {
        const double idf =
            std::log((1.0 + vocab.n_documents) / (1.0 + vocab.document_frequency[id])) + 1.0;
        const double v = tf * idf;
        out.items.push_back({id, v});
        sq += v * v;
    }
    if (sq > 0.0) {
        const double inv = 1.0 / std::sqrt(sq);
        for (auto& e : out.items) e.value *= inv;
    }
    return out;
}

inline double cosine_similarity(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("cosine_similarity: dimension mismatch");
    }
    const double na = l2_norm(a);
    const double nb = l2_norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / (na * nb);
}

} // namespace sumkit
