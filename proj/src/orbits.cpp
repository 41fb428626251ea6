#include "asmgyr/orbits.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "asmgyr/gyration.hpp"
#include "asmgyr/kernels.hpp"

namespace asmgyr {

namespace {

// Packed colorings up to 256 edges, i.e. n <= 10.
constexpr int kMaxOrbitOrder = 10;
using Key = std::array<std::uint64_t, 4>;

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : k) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

// Edge permutations and sweep plan for one order; maps act on Key in place.
class MapKernel {
public:
    explicit MapKernel(int n) : n_(n), plan_(kernel::plan(n)) {
        const GridGeometry& g = geometry(n);
        words_ = word_count(g.edge_count());
        rotate_.resize(g.edge_count());
        mirror_.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto [a, b] = g.ends(e);
            // The lower/left end of the rotated edge is the image of b.
            const Vertex rb{n + 1 - b.x, n + 1 - b.y};
            rotate_[e] = g.is_horizontal(e) ? g.horizontal(rb.x, rb.y) : g.vertical(rb.x, rb.y);
            mirror_[e] = g.is_horizontal(e) ? g.vertical(a.y, a.x) : g.horizontal(a.y, a.x);
        }
    }

    std::span<std::uint64_t> view(Key& k) const { return {k.data(), words_}; }

    void apply(Key& k, NamedMap m) const {
        auto w = view(k);
        switch (m) {
            case NamedMap::G:
                kernel::gyrate(w, plan_);
                break;
            case NamedMap::Ginv:
                kernel::gyrate_inverse(w, plan_);
                break;
            case NamedMap::G2n:
                for (int i = 0; i < 2 * n_; ++i) kernel::gyrate(w, plan_);
                break;
            case NamedMap::GnRot:
                for (int i = 0; i < n_; ++i) kernel::gyrate(w, plan_);
                permute(k, rotate_);
                break;
            case NamedMap::ReflOdd:
                permute(k, mirror_);
                kernel::h_sweep(view(k), plan_, Parity::Odd);
                break;
            case NamedMap::ReflEven:
                permute(k, mirror_);
                kernel::h_sweep(view(k), plan_, Parity::Even);
                break;
        }
    }

private:
    void permute(Key& k, const std::vector<int>& to) const {
        Key out{};
        for (std::size_t e = 0; e < to.size(); ++e) {
            if (kernel::bit(k, static_cast<int>(e))) kernel::flip(out, to[e]);
        }
        k = out;
    }

    int n_;
    const kernel::SweepPlan& plan_;
    std::size_t words_ = 0;
    std::vector<int> rotate_;
    std::vector<int> mirror_;
};

Key key_of(const EdgeColoring& c) {
    Key k{};
    std::copy(c.words().begin(), c.words().end(), k.begin());
    return k;
}

struct StateSet {
    std::vector<Key> states;
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
};

StateSet collect_states(int n, std::uint64_t cap) {
    if (n > kMaxOrbitOrder) throw std::invalid_argument("orbit search supports n <= 10");
    require_within_cap(n, cap);
    StateSet s;
    for_each_asm(n, [&](const Asm& a) {
        const Key k = key_of(asm_to_coloring(a));
        s.index.emplace(k, static_cast<std::uint32_t>(s.states.size()));
        s.states.push_back(k);
    });
    return s;
}

BigInt lcm_of(const std::map<std::uint64_t, std::uint64_t>& sizes) {
    BigInt order = 1;
    for (const auto& [size, count] : sizes) order = boost::multiprecision::lcm(order, BigInt(size));
    return order;
}

std::uint32_t lookup(const StateSet& s, const Key& k) {
    const auto it = s.index.find(k);
    if (it == s.index.end()) throw std::logic_error("map left the set of ASMs");
    return it->second;
}

}  // namespace

std::string_view map_name(NamedMap m) {
    switch (m) {
        case NamedMap::G: return "G";
        case NamedMap::Ginv: return "Ginv";
        case NamedMap::G2n: return "G2n";
        case NamedMap::GnRot: return "GnRot";
        case NamedMap::ReflOdd: return "refl-odd";
        case NamedMap::ReflEven: return "refl-even";
    }
    return "?";
}

std::optional<NamedMap> parse_map(std::string_view name) {
    for (NamedMap m : {NamedMap::G, NamedMap::Ginv, NamedMap::G2n, NamedMap::GnRot, NamedMap::ReflOdd,
                       NamedMap::ReflEven}) {
        if (map_name(m) == name) return m;
    }
    return std::nullopt;
}

Asm apply_map(const Asm& a, NamedMap m) {
    switch (m) {
        case NamedMap::G: return gyrate(a);
        case NamedMap::Ginv: return gyrate_inverse(a);
        case NamedMap::G2n: {
            Asm out = a;
            for (int i = 0; i < 2 * a.order(); ++i) out = gyrate(out);
            return out;
        }
        case NamedMap::GnRot: {
            Asm out = a;
            for (int i = 0; i < a.order(); ++i) out = gyrate(out);
            return rotate_pi(out);
        }
        case NamedMap::ReflOdd: return dihedral_generator(a, Parity::Odd);
        case NamedMap::ReflEven: return dihedral_generator(a, Parity::Even);
    }
    throw std::invalid_argument("unknown map");
}

std::string factorize(const BigInt& value) {
    if (value < 1) throw std::invalid_argument("factorize expects a positive value");
    if (value == 1) return "1";
    std::ostringstream out;
    BigInt rest = value;
    bool first = true;
    auto emit = [&](const BigInt& p, int e) {
        out << (first ? "" : " * ") << p;
        if (e > 1) out << '^' << e;
        first = false;
    };
    for (BigInt p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) emit(p, e);
    }
    if (rest > 1) emit(rest, 1);
    return out.str();
}

std::string OrbitReport::to_text() const {
    std::ostringstream out;
    out << "# n=" << n << " map=" << map_name(map) << " elements=" << elements << '\n';
    out << "size\tmultiplicity\n";
    for (const auto& [size, count] : size_multiplicity) out << size << '\t' << count << '\n';
    out << "order\t" << order << '\n';
    out << "factored\t" << factorize(order) << '\n';
    return out.str();
}

OrbitReport orbit_partition_serial(int n, NamedMap m, std::uint64_t cap) {
    const StateSet s = collect_states(n, cap);
    const MapKernel kernel(n);
    std::vector<bool> visited(s.states.size(), false);
    OrbitReport report;
    report.n = n;
    report.map = m;
    report.elements = s.states.size();
    for (std::size_t i = 0; i < s.states.size(); ++i) {
        if (visited[i]) continue;
        visited[i] = true;
        std::uint64_t size = 1;
        Key cur = s.states[i];
        kernel.apply(cur, m);
        while (cur != s.states[i]) {
            const std::uint32_t j = lookup(s, cur);
            if (visited[j]) throw std::logic_error("map is not injective on A_n");
            visited[j] = true;
            ++size;
            kernel.apply(cur, m);
        }
        ++report.size_multiplicity[size];
    }
    report.order = lcm_of(report.size_multiplicity);
    return report;
}

OrbitReport orbit_partition(int n, NamedMap m, int workers, std::uint64_t cap) {
    const StateSet s = collect_states(n, cap);
    const MapKernel kernel(n);
    const long count = static_cast<long>(s.states.size());
    std::vector<std::uint32_t> image(s.states.size());
    std::vector<char> escaped(s.states.size(), 0);
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : 1)
    for (long i = 0; i < count; ++i) {
        Key k = s.states[i];
        kernel.apply(k, m);
        const auto it = s.index.find(k);
        if (it == s.index.end()) {
            escaped[i] = 1;
        } else {
            image[i] = it->second;
        }
    }
    for (char e : escaped) {
        if (e) throw std::logic_error("map left the set of ASMs");
    }
    std::vector<bool> hit(s.states.size(), false);
    for (std::uint32_t j : image) {
        if (hit[j]) throw std::logic_error("map is not injective on A_n");
        hit[j] = true;
    }

    OrbitReport report;
    report.n = n;
    report.map = m;
    report.elements = s.states.size();
    std::vector<bool> visited(s.states.size(), false);
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (visited[i]) continue;
        std::uint64_t size = 0;
        for (std::size_t j = i; !visited[j]; j = image[j]) {
            visited[j] = true;
            ++size;
        }
        ++report.size_multiplicity[size];
    }
    report.order = lcm_of(report.size_multiplicity);
    return report;
}

BigInt order_of(int n, NamedMap m, int workers, std::uint64_t cap) {
    return orbit_partition(n, m, workers, cap).order;
}

OrbitTrace orbit_of(const Asm& a, NamedMap m, std::uint64_t max_steps) {
    OrbitTrace t;
    t.orbit.push_back(a);
    Asm cur = apply_map(a, m);
    for (std::uint64_t step = 1; step <= max_steps; ++step) {
        if (cur == a) {
            t.period = step;
            return t;
        }
        t.orbit.push_back(cur);
        cur = apply_map(cur, m);
    }
    return t;
}

}  // namespace asmgyr
