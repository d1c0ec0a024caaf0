#include "gaudin/cartan.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gaudin {

using nlohmann::json;

CartanData make_cartan_A(int rank) {
    if (rank < 1) throw std::invalid_argument("make_cartan_A: rank must be >= 1");
    CartanData c;
    c.rank = rank;
    c.matrix.assign(rank, std::vector<long>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        c.matrix[i][i] = 2;
        if (i + 1 < rank) {
            c.matrix[i][i + 1] = -1;
            c.matrix[i + 1][i] = -1;
        }
    }
    c.symmetrizer.assign(rank, 1);
    return c;
}

CartanDiagnostics validate(const CartanData& cartan) {
    CartanDiagnostics diag;
    const int r = cartan.rank;
    if (r < 1) {
        diag.violations.push_back("rank must be >= 1");
        return diag;
    }
    if (static_cast<int>(cartan.matrix.size()) != r) {
        diag.violations.push_back("matrix row count != rank");
        return diag;
    }
    for (const auto& row : cartan.matrix)
        if (static_cast<int>(row.size()) != r) {
            diag.violations.push_back("matrix is not square");
            return diag;
        }
    if (static_cast<int>(cartan.symmetrizer.size()) != r) {
        diag.violations.push_back("symmetrizer length != rank");
        return diag;
    }
    for (int i = 0; i < r; ++i) {
        if (cartan.matrix[i][i] != 2)
            diag.violations.push_back("a_" + std::to_string(i) + std::to_string(i) + " != 2");
        if (cartan.symmetrizer[i] <= 0)
            diag.violations.push_back("d_" + std::to_string(i) + " not positive");
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan.matrix[i][j] > 0)
                diag.violations.push_back("off-diagonal a_" + std::to_string(i) +
                                          std::to_string(j) + " positive");
            if ((cartan.matrix[i][j] == 0) != (cartan.matrix[j][i] == 0))
                diag.violations.push_back("a_ij = 0 but a_ji != 0 at (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
            if (cartan.symmetrizer[i] * cartan.matrix[i][j] !=
                cartan.symmetrizer[j] * cartan.matrix[j][i])
                diag.violations.push_back("D*A not symmetric at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
        }
    diag.valid = diag.violations.empty();
    if (diag.valid) {
        Matrix b = matrix_zero(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                b[i][j] = Scalar(Rational(cartan.matrix[i][j]));
        diag.invertible = invert_exact(b).has_value();
    }
    return diag;
}

void validate_instance(const ProblemInstance& instance) {
    auto diag = validate(instance.cartan);
    if (!diag.valid) {
        std::string msg = "invalid Cartan data:";
        for (const auto& v : diag.violations) msg += " " + v;
        throw std::invalid_argument(msg);
    }
    const std::size_t n = instance.z.size();
    if (n == 0) throw std::invalid_argument("instance needs at least one marked point z");
    if (instance.weights.count() != n)
        throw std::invalid_argument("weights count must equal number of marked points");
    for (const auto& m : instance.weights.coroot_pairings)
        if (static_cast<int>(m.size()) != instance.rank())
            throw std::invalid_argument("weight vector length must equal rank");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (instance.z[i] == instance.z[j])
                throw std::invalid_argument("marked points z must be pairwise distinct");
    if (static_cast<int>(instance.l.size()) != instance.rank())
        throw std::invalid_argument("occupation vector length must equal rank");
    if (instance.weights.gram) {
        const auto& g = *instance.weights.gram;
        if (g.size() != n) throw std::invalid_argument("gram matrix size must equal n");
        for (const auto& row : g)
            if (row.size() != n) throw std::invalid_argument("gram matrix must be square");
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t k = 0; k < n; ++k)
                if (g[s][k] != g[k][s])
                    throw std::invalid_argument("gram matrix must be symmetric");
    }
}

PairingTable pairings(const ProblemInstance& instance) {
    validate_instance(instance);
    const int r = instance.rank();
    const std::size_t n = instance.points();
    PairingTable t;

    t.alpha_alpha.assign(r, std::vector<Rational>(r, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            t.alpha_alpha[i][j] = instance.cartan.alpha_pairing(i, j);

    t.coroot = instance.weights.coroot_pairings;
    t.weight_alpha.assign(n, std::vector<Rational>(r, Rational(0)));
    for (std::size_t s = 0; s < n; ++s)
        for (int i = 0; i < r; ++i)
            // (Lambda_s, alpha_i) = d_i * <Lambda_s, alpha_i^v>
            t.weight_alpha[s][i] = Rational(instance.cartan.d(i)) * t.coroot[s][i];

    // (Lambda_s, Lambda_k) = sum_ij m_s[i] m_k[j] d_i d_j (B^-1)_ij, B = D A.
    std::optional<std::vector<std::vector<Rational>>> computed;
    Matrix b = matrix_zero(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b[i][j] = Scalar(Rational(instance.cartan.d(i) * instance.cartan.a(i, j)));
    if (auto binv = invert_exact(b)) {
        computed.emplace(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t k = 0; k < n; ++k) {
                Rational acc(0);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        acc += t.coroot[s][i] * t.coroot[k][j] *
                               Rational(instance.cartan.d(i) * instance.cartan.d(j)) *
                               (*binv)[i][j].rat();
                (*computed)[s][k] = acc;
            }
    }

    if (instance.weights.gram) {
        if (computed && *computed != *instance.weights.gram)
            throw std::invalid_argument(
                "explicit gram matrix disagrees with the pairing-derived one");
        t.weight_weight = *instance.weights.gram;
    } else if (computed) {
        t.weight_weight = *computed;
    } else {
        throw std::invalid_argument(
            "singular Cartan matrix: an explicit gram matrix is required");
    }
    return t;
}

namespace {

Scalar scalar_from_json(const json& v) {
    if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find("0x") != std::string::npos || s.find("0X") != std::string::npos) {
            // hex float, optionally "hex@prec"
            mpfr_prec_t prec = kDefaultPrecision;
            auto at = s.find('@');
            std::string core = s;
            if (at != std::string::npos) {
                prec = static_cast<mpfr_prec_t>(std::stol(s.substr(at + 1)));
                core = s.substr(0, at);
            }
            return Scalar(BigComplex(BigFloat::from_string(core, prec), BigFloat(prec)));
        }
        return Scalar(parse_rational(s));
    }
    if (v.is_array() && v.size() == 2) {
        // [re, im] numeric pair at default precision
        Scalar re = scalar_from_json(v[0]);
        Scalar im = scalar_from_json(v[1]);
        mpfr_prec_t prec = kDefaultPrecision;
        if (!re.is_exact()) prec = re.cplx().precision();
        if (!im.is_exact()) prec = std::min(prec, im.cplx().precision());
        return Scalar(BigComplex(re.to_complex(prec).re(), im.to_complex(prec).re()));
    }
    throw std::invalid_argument("malformed scalar in instance file: " + v.dump());
}

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return rational_to_string(s.rat());
    std::string prec = "@" + std::to_string(s.cplx().precision());
    if (s.cplx().im().is_zero()) return s.cplx().re().to_hex() + prec;
    return json::array({s.cplx().re().to_hex() + prec, s.cplx().im().to_hex() + prec});
}

std::vector<Rational> rational_row(const json& row, const char* field) {
    if (!row.is_array()) throw std::invalid_argument(std::string("field '") + field +
                                                     "' must hold arrays");
    std::vector<Rational> out;
    for (const auto& v : row) {
        if (v.is_number_integer())
            out.push_back(Rational(v.get<long>()));
        else if (v.is_string())
            out.push_back(parse_rational(v.get<std::string>()));
        else
            throw std::invalid_argument(std::string("field '") + field +
                                        "' entries must be integers or 'p/q' strings");
    }
    return out;
}

}  // namespace

ProblemInstance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("instance file is not valid JSON: ") + e.what());
    }
    ProblemInstance inst;

    if (!j.contains("algebra")) throw std::invalid_argument("missing field 'algebra'");
    const json& alg = j["algebra"];
    if (alg.contains("type")) {
        if (alg["type"].get<std::string>() != "A")
            throw std::invalid_argument("algebra.type must be \"A\"");
        inst.cartan = make_cartan_A(alg.at("rank").get<int>());
    } else if (alg.contains("cartan")) {
        const json& m = alg["cartan"];
        inst.cartan.rank = static_cast<int>(m.size());
        for (const auto& row : m)
            inst.cartan.matrix.push_back(row.get<std::vector<long>>());
        if (alg.contains("symmetrizer"))
            inst.cartan.symmetrizer = alg["symmetrizer"].get<std::vector<long>>();
        else
            inst.cartan.symmetrizer.assign(inst.cartan.rank, 1);
    } else {
        throw std::invalid_argument("field 'algebra' needs 'type'+'rank' or 'cartan'");
    }

    if (!j.contains("weights")) throw std::invalid_argument("missing field 'weights'");
    for (const auto& row : j["weights"])
        inst.weights.coroot_pairings.push_back(rational_row(row, "weights"));

    if (j.contains("gram") && !j["gram"].is_null()) {
        std::vector<std::vector<Rational>> gram;
        for (const auto& row : j["gram"]) gram.push_back(rational_row(row, "gram"));
        inst.weights.gram = std::move(gram);
    }

    if (!j.contains("z")) throw std::invalid_argument("missing field 'z'");
    for (const auto& v : j["z"]) inst.z.push_back(scalar_from_json(v));

    if (!j.contains("l")) throw std::invalid_argument("missing field 'l'");
    for (const auto& v : j["l"]) {
        long x = v.get<long>();
        if (x < 0) throw std::invalid_argument("field 'l' entries must be nonnegative");
        inst.l.push_back(static_cast<unsigned>(x));
    }

    validate_instance(inst);
    return inst;
}

std::string instance_to_json(const ProblemInstance& instance) {
    json j;
    j["algebra"] = {{"cartan", instance.cartan.matrix},
                    {"symmetrizer", instance.cartan.symmetrizer}};
    json weights = json::array();
    for (const auto& row : instance.weights.coroot_pairings) {
        json r = json::array();
        for (const auto& q : row) r.push_back(rational_to_string(q));
        weights.push_back(r);
    }
    j["weights"] = weights;
    if (instance.weights.gram) {
        json g = json::array();
        for (const auto& row : *instance.weights.gram) {
            json r = json::array();
            for (const auto& q : row) r.push_back(rational_to_string(q));
            g.push_back(r);
        }
        j["gram"] = g;
    }
    json z = json::array();
    for (const auto& s : instance.z) z.push_back(scalar_to_json(s));
    j["z"] = z;
    j["l"] = instance.l;
    return j.dump(2);
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_json(buf.str());
}

}  // namespace gaudin
