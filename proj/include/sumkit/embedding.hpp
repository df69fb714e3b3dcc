#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "sumkit/errors.hpp"
#include "sumkit/linalg.hpp"
#include "sumkit/rng.hpp"
#include "sumkit/textproc.hpp"

namespace sumkit {

struct EmbeddingTable {
    int dimension = 0;
    std::unordered_map<std::string, int> index;
    std::vector<std::string> terms;
    std::vector<DenseVector> vectors;

    struct Meta {
        uint64_t seed = 0;
        int epochs = 0;
        uint64_t corpus_hash = 0;
        std::vector<double> epoch_loss;
    } meta;

    const DenseVector* find(const std::string& term) const {
        auto it = index.find(term);
        return it == index.end() ? nullptr : &vectors[it->second];
    }

    void insert(const std::string& term, DenseVector v) {
        auto it = index.find(term);
        if (it != index.end()) {
            vectors[it->second] = std::move(v);
            return;
        }
        index.emplace(term, static_cast<int>(terms.size()));
        terms.push_back(term);
        vectors.push_back(std::move(v));
    }

    uint64_t fingerprint() const {
        uint64_t h = fnv1a64("embedding");
        for (size_t i = 0; i < terms.size(); ++i) {
            h = fnv1a64(terms[i], h);
            h = fnv1a64(vectors[i].data(), vectors[i].size() * sizeof(double), h);
        }
        return h;
    }
};

struct SentenceVector {
    DenseVector values;
    bool is_zero = false;
};

// Mean of the word vectors found in the table; all-OOV and empty inputs map
// to the flagged zero vector.
inline SentenceVector sentence_embedding(const std::vector<std::string>& tokens,
                                         const EmbeddingTable& table) {
    SentenceVector out;
    out.values.assign(table.dimension, 0.0);
    int hits = 0;
    for (const auto& tok : tokens) {
        if (const DenseVector* v = table.find(tok)) {
            for (int d = 0; d < table.dimension; ++d) out.values[d] += (*v)[d];
            ++hits;
        }
    }
    if (hits == 0) {
        out.is_zero = true;
        return out;
    }
    for (double& x : out.values) x /= hits;
    return out;
}

namespace detail {

inline double softplus(double x) {
    // log(1 + e^x) without overflow
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

} // namespace detail

struct Word2VecConfig {
    int dimension = 100;
    int epochs = 5;
    int window = 5;
    int negatives = 5;
    double learning_rate = 0.025;
};

// Skip-gram with negative sampling, single-threaded so a fixed seed gives a
// bit-identical table. Negatives come from the unigram^0.75 distribution and
// the learning rate decays linearly over all scheduled tokens.
inline EmbeddingTable train_word_embeddings(const std::vector<std::vector<std::string>>& corpus,
                                            const Word2VecConfig& config, uint64_t seed) {
    if (config.dimension < 2) throw Error("train_word_embeddings: dimension must be >= 2");
    if (config.epochs < 1) throw Error("train_word_embeddings: epochs must be >= 1");

    std::map<std::string, int64_t> counts;
    int64_t total_tokens = 0;
    uint64_t corpus_hash = fnv1a64("corpus");
    for (const auto& sent : corpus) {
        for (const auto& tok : sent) {
            ++counts[tok];
            ++total_tokens;
            corpus_hash = fnv1a64(tok, corpus_hash);
            corpus_hash = fnv1a64(" ", corpus_hash);
        }
    }
    if (counts.size() < 2) {
        throw InsufficientCorpusError("train_word_embeddings: need at least 2 distinct terms");
    }

    const int vocab_size = static_cast<int>(counts.size());
    std::vector<std::string> terms;
    terms.reserve(vocab_size);
    std::vector<double> cumulative;
    cumulative.reserve(vocab_size);
    double mass = 0.0;
    for (const auto& [term, count] : counts) {
        terms.push_back(term);
        mass += std::pow(static_cast<double>(count), 0.75);
        cumulative.push_back(mass);
    }
    std::unordered_map<std::string, int> term_id;
    for (int i = 0; i < vocab_size; ++i) term_id.emplace(terms[i], i);

    std::vector<std::vector<int>> sentences;
    sentences.reserve(corpus.size());
    for (const auto& sent : corpus) {
        std::vector<int> ids;
        ids.reserve(sent.size());
        for (const auto& tok : sent) ids.push_back(term_id[tok]);
        sentences.push_back(std::move(ids));
    }

    Rng rng(seed);
    const int dim = config.dimension;
    std::vector<double> syn0(static_cast<size_t>(vocab_size) * dim);
    std::vector<double> syn1(static_cast<size_t>(vocab_size) * dim, 0.0);
    for (double& x : syn0) x = (unit_double(rng) - 0.5) / dim;

    auto sample_negative = [&]() {
        const double r = unit_double(rng) * mass;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), r);
        return static_cast<int>(it - cumulative.begin());
    };

    const double total_schedule = static_cast<double>(total_tokens) * config.epochs;
    int64_t processed = 0;
    std::vector<double> neu1e(dim);
    std::vector<double> epoch_loss;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        double loss_sum = 0.0;
        int64_t loss_pairs = 0;
        for (const auto& sent : sentences) {
            const int n = static_cast<int>(sent.size());
            for (int pos = 0; pos < n; ++pos) {
                const double frac = static_cast<double>(processed) / (total_schedule + 1.0);
                const double lr =
                    std::max(config.learning_rate * (1.0 - frac), config.learning_rate * 1e-4);
                ++processed;
                const int center = sent[pos];
                double* v = &syn0[static_cast<size_t>(center) * dim];
                for (int off = -config.window; off <= config.window; ++off) {
                    const int cpos = pos + off;
                    if (off == 0 || cpos < 0 || cpos >= n) continue;
                    const int context = sent[cpos];
                    std::fill(neu1e.begin(), neu1e.end(), 0.0);
                    double pair_loss = 0.0;
                    for (int k = 0; k <= config.negatives; ++k) {
                        int target;
                        double label;
                        if (k == 0) {
                            target = context;
                            label = 1.0;
                        } else {
                            target = sample_negative();
                            if (target == context) continue;
                            label = 0.0;
                        }
                        double* u = &syn1[static_cast<size_t>(target) * dim];
                        double score = 0.0;
                        for (int d = 0; d < dim; ++d) score += u[d] * v[d];
                        pair_loss += label == 1.0 ? detail::softplus(-score)
                                                  : detail::softplus(score);
                        const double g = (label - sigmoid(score)) * lr;
                        for (int d = 0; d < dim; ++d) {
                            neu1e[d] += g * u[d];
                            u[d] += g * v[d];
                        }
                    }
                    for (int d = 0; d < dim; ++d) v[d] += neu1e[d];
                    loss_sum += pair_loss;
                    ++loss_pairs;
                }
            }
        }
        epoch_loss.push_back(loss_pairs > 0 ? loss_sum / loss_pairs : 0.0);
    }

    EmbeddingTable table;
    table.dimension = dim;
    table.meta.seed = seed;
    table.meta.epochs = config.epochs;
    table.meta.corpus_hash = corpus_hash;
    table.meta.epoch_loss = std::move(epoch_loss);
    for (int i = 0; i < vocab_size; ++i) {
        DenseVector vec(syn0.begin() + static_cast<size_t>(i) * dim,
                        syn0.begin() + static_cast<size_t>(i + 1) * dim);
        table.insert(terms[i], std::move(vec));
    }
    return table;
}

inline EmbeddingTable train_word_embeddings(const std::vector<std::vector<std::string>>& corpus,
                                            int dimension, int epochs, uint64_t seed) {
    Word2VecConfig config;
    config.dimension = dimension;
    config.epochs = epochs;
    return train_word_embeddings(corpus, config, seed);
}

// Text format: first line "V D", then one term and D reals per line.
inline void save_word_embeddings(const EmbeddingTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write embeddings file: " + path);
    out << table.terms.size() << ' ' << table.dimension << '\n';
    for (size_t i = 0; i < table.terms.size(); ++i) {
        out << table.terms[i];
        for (double v : table.vectors[i]) out << ' ' << detail::format_double(v);
        out << '\n';
    }
    if (!out) throw IoError("failed writing embeddings file: " + path);
}

inline EmbeddingTable load_word_embeddings(const std::string& path,
                                           std::vector<std::string>* warnings = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read embeddings file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("embeddings file is empty: " + path, 1);
    size_t count = 0;
    int dim = 0;
    {
        std::istringstream header(line);
        if (!(header >> count >> dim) || dim <= 0) {
            throw FormatError("bad embeddings header (want \"V D\"): " + path, 1);
        }
    }
    EmbeddingTable table;
    table.dimension = dim;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string term;
        row >> term;
        DenseVector vec;
        vec.reserve(dim);
        std::string field;
        while (row >> field) {
            double v = 0.0;
            auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || p != field.data() + field.size()) {
                throw FormatError("bad number in embeddings file at line " +
                                      std::to_string(line_no),
                                  line_no);
            }
            vec.push_back(v);
        }
        if (static_cast<int>(vec.size()) != dim) {
            throw FormatError("dimension mismatch at line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(dim) + " values, got " +
                                  std::to_string(vec.size()),
                              line_no);
        }
        if (table.index.count(term) && warnings) {
            warnings->push_back("duplicate term \"" + term + "\" at line " +
                                std::to_string(line_no) + "; last occurrence wins");
        }
        table.insert(term, std::move(vec));
    }
    if (table.terms.size() != count) {
        throw FormatError("embeddings header declared " + std::to_string(count) +
                              " terms but file has " + std::to_string(table.terms.size()),
                          line_no);
    }
    return table;
}

} // namespace sumkit
