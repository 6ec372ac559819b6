// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/similarity.hpp>

#include <chainlens/common/errors.hpp>
#include <chainlens/common/hex.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace chainlens::eth {

std::optional<std::size_t> levenshtein(std::string_view a, std::string_view b, std::size_t cutoff)
{
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (m - n > cutoff) return std::nullopt;
    if (n == 0) return m;

    const std::size_t inf = cutoff + 1;
    std::vector<std::size_t> prev(m + 1, inf), cur(m + 1, inf);
    for (std::size_t j = 0; j <= std::min(m, cutoff); ++j) prev[j] = j;

    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > cutoff ? i - cutoff : 0;
        const std::size_t hi = std::min(m, i + cutoff);
        if (lo > 0) cur[lo - 1] = inf;
        std::size_t row_min = inf;
        if (lo == 0) {
            cur[0] = i;
            row_min = i;
        }
        for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
            const std::size_t v = std::min({sub, prev[j] + 1, cur[j - 1] + 1, inf});
            cur[j] = v;
            row_min = std::min(row_min, v);
        }
        if (row_min > cutoff) return std::nullopt;
        std::swap(prev, cur);
    }
    if (prev[m] > cutoff) return std::nullopt;
    return prev[m];
}

std::optional<std::size_t> bytecode_distance(std::string_view a_hex, std::string_view b_hex, std::size_t cutoff)
{
    return levenshtein(normalize_hex(a_hex), normalize_hex(b_hex), cutoff);
}

void SimilarityBuckets::validate() const
{
    if (!(exact < minor && minor < heavy)) throw Error("similarity bucket bounds must be strictly increasing");
}

std::vector<SimilarityRow> bucket_similarity(std::span<const ContractRecord> corpus,
                                             std::span<const SimilarityReference> references,
                                             const SimilarityBuckets& buckets, unsigned threads)
{
    buckets.validate();
    std::vector<std::string> codes;
    for (const ContractRecord& c : corpus) {
        std::string code = normalize_hex(c.code);
        if (!code.empty()) codes.push_back(std::move(code));
    }

    std::vector<SimilarityRow> rows;
    for (const SimilarityReference& ref : references) {
        const std::string ref_code = normalize_hex(ref.code);
        SimilarityRow row{ref.name, ref.optimized, ref_code.size() / 2};
        std::atomic<std::size_t> next{0}, exact{0}, minor{0}, heavy{0};
        auto work = [&] {
            for (std::size_t i = next++; i < codes.size(); i = next++) {
                const auto d = levenshtein(codes[i], ref_code, buckets.heavy);
                if (!d) continue;
                if (*d <= buckets.exact) {
                    ++exact;
                } else if (*d <= buckets.minor) {
                    ++minor;
                } else {
                    ++heavy;
                }
            }
        };
        unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        n = static_cast<unsigned>(std::min<std::size_t>(n, codes.size()));
        if (n <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
        }
        row.exact = exact;
        row.minor = minor;
        row.heavy = heavy;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace chainlens::eth
