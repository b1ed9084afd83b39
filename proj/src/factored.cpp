/*
   Copyright 2026 olfsr contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "olfsr/factored.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "olfsr/u128.hpp"

namespace olfsr {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's cycle variant of Pollard rho; returns a nontrivial factor of the
// odd composite n. Deterministic: the (c, x0) schedule is fixed.
std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1, saved = 2;
        std::uint64_t limit = 1;
        while (d == 1) {
            saved = y;
            for (std::uint64_t i = 0; i < limit && d == 1; ) {
                std::uint64_t q = 1;
                const std::uint64_t batch = std::min<std::uint64_t>(128, limit - i);
                for (std::uint64_t j = 0; j < batch; ++j) {
                    y = mul_mod(y, y, n) + c;
                    if (y >= n) y -= n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                i += batch;
                d = gcd_u64(q, n);
            }
            x = y;
            limit <<= 1;
        }
        if (d == n) {
            // batching overshot a factor; replay one step at a time
            y = saved;
            d = 1;
            while (d == 1) {
                y = mul_mod(y, y, n) + c;
                if (y >= n) y -= n;
                d = gcd_u64(x > y ? x - y : y - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    const int s = std::countr_zero(n - 1);
    const std::uint64_t d = (n - 1) >> s;
    // this base set is known to be deterministic for all 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FactoredInt factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    FactoredInt out;
    out.value = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!out.factors.empty() && out.factors.back().prime == p)
            ++out.factors.back().exponent;
        else
            out.factors.push_back({p, 1});
    }
    return out;
}

std::uint64_t euler_phi(const FactoredInt& f) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::uint64_t mersenne(unsigned g) {
    if (g == 0 || g > 64) throw std::invalid_argument("mersenne: degree must be 1..64");
    return g == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g) - 1;
}

namespace {
std::mutex g_mersenne_mutex;
std::map<unsigned, FactoredInt> g_mersenne_cache;
}  // namespace

FactoredInt mersenne_factors(unsigned g) {
    const std::uint64_t n = mersenne(g);
    {
        std::lock_guard lock(g_mersenne_mutex);
        auto it = g_mersenne_cache.find(g);
        if (it != g_mersenne_cache.end()) return it->second;
    }
    FactoredInt f = factor(n);
    std::lock_guard lock(g_mersenne_mutex);
    g_mersenne_cache.emplace(g, f);
    return f;
}

std::map<unsigned, FactoredInt> parse_factor_table(const std::string& text) {
    std::map<unsigned, FactoredInt> table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        unsigned g = 0;
        char colon = 0;
        if (!(ls >> g >> colon) || colon != ':')
            throw std::invalid_argument("factor table: malformed line: " + line);
        FactoredInt f;
        f.value = mersenne(g);
        std::string tok;
        u128 check = 1;
        while (ls >> tok) {
            const auto caret = tok.find('^');
            PrimePower pp{};
            pp.prime = std::stoull(tok.substr(0, caret));
            pp.exponent = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
            for (unsigned i = 0; i < pp.exponent; ++i) check *= pp.prime;
            f.factors.push_back(pp);
        }
        if (check != f.value)
            throw std::invalid_argument("factor table: line does not multiply back to 2^g-1: " + line);
        table.emplace(g, std::move(f));
    }
    return table;
}

std::string format_factor_table(const std::map<unsigned, FactoredInt>& table) {
    std::ostringstream out;
    for (const auto& [g, f] : table) {
        out << g << ':';
        for (const auto& [p, e] : f.factors) {
            out << ' ' << p;
            if (e > 1) out << '^' << e;
        }
        out << '\n';
    }
    return out.str();
}

void load_mersenne_cache(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open factor table: " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    auto table = parse_factor_table(buf.str());
    std::lock_guard lock(g_mersenne_mutex);
    for (auto& [g, f] : table) g_mersenne_cache.insert_or_assign(g, std::move(f));
}

void save_mersenne_cache(const std::filesystem::path& file, unsigned g_max) {
    std::map<unsigned, FactoredInt> table;
    for (unsigned g = 1; g <= g_max; ++g) table.emplace(g, mersenne_factors(g));
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write factor table: " + file.string());
    out << format_factor_table(table);
}

}  // namespace olfsr
