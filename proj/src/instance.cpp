#include "polyqd/instance.hpp"

#include <json.hpp>

#include "polyqd/rng.hpp"

namespace polyqd::instance {

using nlohmann::json;

void validate_params(const Params& p, Mode mode) {
    if (p.n < 1 || p.n > 16) throw parameter_error("params: n must be in [1,16]");
    if (p.d < 1 || p.d > p.n) throw parameter_error("params: need 1 <= d <= n");
    if (p.m < 2) throw parameter_error("params: m must be at least 2");
    if (p.m > (1 << p.n))
        throw parameter_error("params: m <= 2^n violated (Reed-Solomon needs m distinct evaluation points)");
    if (p.k_dual < 1 || p.k_dual >= p.m) throw parameter_error("params: 1 <= k_dual < m violated");
    if (p.epsilon.num <= 0) throw parameter_error("params: epsilon must be positive");
    if (2 * p.epsilon.num >= p.epsilon.den)
        throw parameter_error("params: epsilon < 1/2 violated");
    if (!p.gamma.empty() && int(p.gamma.size()) != p.m)
        throw parameter_error("params: gamma must have m entries");
    if (!list_radius_covers_threshold(p.k_dual, p.m, p.epsilon))
        throw parameter_error("params: 1 - sqrt(1-alpha) > 1/2 + eps violated "
                              "(list radius does not cover the weight threshold)");
    if (mode == Mode::strict) {
        if (6 * p.epsilon.num >= p.epsilon.den)
            throw parameter_error("params: strict mode requires eps < 1/6");
        if (!strict_rate_window(p.k_dual, p.m, p.epsilon))
            throw parameter_error("params: strict mode requires 7/8 + (3/4)eps < alpha < 1");
    }
}

Instance gen(const Params& p, Mode mode) {
    validate_params(p, mode);
    return assemble(p);
}

Instance assemble(const Params& p) {
    Instance inst;
    inst.params = p;
    std::uint32_t modulus = p.modulus ? p.modulus : gf2e::FieldCtx::default_modulus(p.n);
    inst.params.modulus = modulus;
    inst.ctx = gf2e::field_new(p.n, modulus);
    std::vector<Elem> gamma = p.gamma.empty() ? rscode::default_gamma(*inst.ctx, p.m) : p.gamma;
    inst.params.gamma = gamma;
    inst.code = rscode::build_codes(inst.ctx, p.m, p.k_dual, gamma);

    Rng rng(p.seed);
    boolpoly::PolyDistribution dist{p.n, p.d};
    inst.polys.reserve(p.m);
    for (int i = 0; i < p.m; ++i) {
        AnfPoly poly = boolpoly::sample(dist, rng);
        while (p.reject_rootless && poly.is_one()) poly = boolpoly::sample(dist, rng);
        inst.polys.push_back(std::move(poly));
    }
    return inst;
}

std::vector<Elem> solution_symbols(const Instance& inst, const Solution& sol) {
    int n = inst.params.n, m = inst.params.m;
    if (sol.y.size() != n * m) throw parameter_error("solution: length mismatch");
    std::vector<Elem> syms(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (sol.y.get(i * n + j)) syms[i] |= Elem(1) << j;
    return syms;
}

Solution solution_from_symbols(const Instance& inst, const std::vector<Elem>& syms) {
    int n = inst.params.n, m = inst.params.m;
    if (int(syms.size()) != m) throw parameter_error("solution: symbol count mismatch");
    Solution s;
    s.y = bitmat::BitVec(n * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if ((syms[i] >> j) & 1) s.y.set(i * n + j, 1);
    return s;
}

VerifyResult verify(const Instance& inst, const Solution& sol) {
    VerifyResult r;
    int n = inst.params.n, m = inst.params.m;
    if (sol.y.size() != n * m) {
        r.failed_constraint = "length";
        return r;
    }
    auto syms = solution_symbols(inst, sol);
    for (int i = 0; i < m; ++i) {
        if (inst.polys[i].eval(syms[i]) != 0) {
            r.failed_constraint = "poly";
            r.poly_index = i;
            return r;
        }
    }
    if (!rscode::is_codeword(inst.code, syms, rscode::Which::primal)) {
        r.failed_constraint = "parity";
        return r;
    }
    r.valid = true;
    return r;
}

std::uint64_t solution_count(const Instance& inst) {
    const auto& code = inst.code;
    int n = inst.params.n, m = inst.params.m;

    double root_side = 1.0;
    std::vector<std::vector<std::uint32_t>> root_sets(m);
    for (int i = 0; i < m; ++i) {
        root_sets[i] = boolpoly::roots(inst.polys[i]);
        root_side *= double(root_sets[i].size());
        if (root_sets[i].empty()) return 0;
    }
    double code_side = std::pow(2.0, double(n) * code.k_primal);

    if (root_side <= code_side) {
        if (root_side > double(1 << 24))
            throw capability_error("instance: solution_count root-side enumeration too large");
        // Odometer over the product of root sets; count tuples in C.
        std::vector<std::size_t> pos(m, 0);
        std::vector<Elem> syms(m);
        for (int i = 0; i < m; ++i) syms[i] = Elem(root_sets[i][0]);
        std::uint64_t count = 0;
        for (;;) {
            if (rscode::is_codeword(code, syms, rscode::Which::primal)) ++count;
            int i = 0;
            while (i < m) {
                if (++pos[i] < root_sets[i].size()) {
                    syms[i] = Elem(root_sets[i][pos[i]]);
                    break;
                }
                pos[i] = 0;
                syms[i] = Elem(root_sets[i][0]);
                ++i;
            }
            if (i == m) break;
        }
        return count;
    }

    if (n * code.k_primal > 24)
        throw capability_error("instance: solution_count code-side enumeration too large");
    // Root membership bitmaps per block.
    std::vector<std::vector<bool>> is_root(m, std::vector<bool>(std::size_t(1) << n, false));
    for (int i = 0; i < m; ++i)
        for (auto rt : root_sets[i]) is_root[i][rt] = true;
    std::uint64_t total = std::uint64_t(1) << (n * code.k_primal);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto cw = rscode::primal_codeword(code, idx);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = is_root[i][cw[i]];
        count += ok;
    }
    return count;
}

double heuristic_solution_count(const Instance& inst) {
    double h = std::pow(2.0, double(inst.params.n) * inst.code.k_primal);
    for (const auto& p : inst.polys)
        h *= double(boolpoly::root_count(p)) / std::pow(2.0, inst.params.n);
    return h;
}

namespace {

std::string modulus_bits_string(std::uint32_t modulus, int n) {
    std::string s(n + 1, '0');
    for (int i = 0; i <= n; ++i)
        if ((modulus >> i) & 1) s[i] = '1';   // little-endian: s[i] = coeff of x^i
    return s;
}

std::uint32_t modulus_from_bits_string(const std::string& s) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') m |= std::uint32_t(1) << i;
        else if (s[i] != '0') throw parameter_error("instance: bad modulus bitstring");
    }
    return m;
}

}  // namespace

std::string to_json(const Instance& inst) {
    json j;
    j["version"] = 1;
    j["n"] = inst.params.n;
    j["m"] = inst.params.m;
    j["d"] = inst.params.d;
    j["k_dual"] = inst.params.k_dual;
    j["epsilon"] = {{"num", inst.params.epsilon.num}, {"den", inst.params.epsilon.den}};
    j["modulus_bits"] = modulus_bits_string(inst.params.modulus, inst.params.n);
    j["gamma"] = inst.params.gamma;
    json polys = json::array();
    for (const auto& p : inst.polys) polys.push_back(p.monomials());
    j["polys"] = polys;
    j["seed"] = inst.params.seed;
    j["reject_rootless"] = inst.params.reject_rootless;
    return j.dump();
}

Instance from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("version").get<int>() != 1) throw parameter_error("instance: unsupported file version");
    Params p;
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    p.d = j.at("d").get<int>();
    p.k_dual = j.at("k_dual").get<int>();
    p.epsilon = Rational(j.at("epsilon").at("num").get<std::int64_t>(),
                         j.at("epsilon").at("den").get<std::int64_t>());
    p.modulus = modulus_from_bits_string(j.at("modulus_bits").get<std::string>());
    p.gamma = j.at("gamma").get<std::vector<Elem>>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.reject_rootless = j.value("reject_rootless", true);

    validate_params(p, Mode::desk);
    Instance inst;
    inst.params = p;
    inst.ctx = gf2e::field_new(p.n, p.modulus);
    inst.code = rscode::build_codes(inst.ctx, p.m, p.k_dual, p.gamma);
    auto jp = j.at("polys");
    if (int(jp.size()) != p.m) throw parameter_error("instance: polynomial count mismatch");
    for (const auto& masks : jp)
        inst.polys.emplace_back(p.n, p.d, masks.get<std::vector<boolpoly::Mask>>());
    return inst;
}

std::string solution_to_json(const Solution& sol) {
    static const char* hexdig = "0123456789abcdef";
    int nbits = sol.y.size();
    std::string hex;
    for (int base = 0; base < nbits; base += 4) {
        int nib = 0;
        for (int b = 0; b < 4 && base + b < nbits; ++b) nib |= sol.y.get(base + b) << b;
        hex += hexdig[nib];   // little-endian nibbles: bit i at nibble i/4, bit i%4
    }
    json j;
    j["mn"] = nbits;
    j["y_hex"] = hex;
    return j.dump();
}

Solution solution_from_json(const std::string& text) {
    json j = json::parse(text);
    int nbits = j.at("mn").get<int>();
    std::string hex = j.at("y_hex").get<std::string>();
    if (int(hex.size()) != (nbits + 3) / 4) throw parameter_error("solution: hex length mismatch");
    Solution s;
    s.y = bitmat::BitVec(nbits);
    for (int i = 0; i < nbits; ++i) {
        char c = hex[i / 4];
        int nib = (c >= '0' && c <= '9') ? c - '0'
                : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                : throw parameter_error("solution: bad hex digit");
        if ((nib >> (i % 4)) & 1) s.y.set(i, 1);
    }
    return s;
}

}  // namespace polyqd::instance
