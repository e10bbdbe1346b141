#include "fusq/suites.hpp"

#include <sstream>

namespace fusq {

bool Report::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

void Report::add(const std::string& name, bool pass, const std::string& detail) {
    items.push_back({name, pass, detail});
}

json Report::to_json() const {
    json checks = json::array();
    for (const auto& it : items) {
        json c{{"name", it.name}, {"pass", it.pass}};
        if (!it.detail.empty()) c["detail"] = it.detail;
        checks.push_back(c);
    }
    return json{{"suite", suite}, {"pass", all_pass()}, {"checks", checks}};
}

CenterObject setup_pointed_cycle(int n, long power) {
    auto b = std::make_shared<Backend>(Backend::pointed_cyclic(n));
    std::vector<Mat> c(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g)
        c[static_cast<size_t>(g)] = Mat(1, 1, {Cyclotomic::root_of_unity(n, power * g)});
    return make_center_object_pointed(std::move(b), {1}, c);
}

CenterObject setup_rep_z2_v() {
    auto b = std::make_shared<Backend>(Backend::rep_z2_sl2());
    int sgn = 1 - b->unit_simple();
    return center_from_backend_object(b, b->obj_from_summands({sgn, sgn}));
}

CenterObject setup_rep_z3_v() {
    auto b = std::make_shared<Backend>(Backend::rep_z3_sl2());
    return center_from_backend_object(b, b->obj_from_summands({1, 2}));
}

CenterObject setup_rep_q8_v() {
    auto b = std::make_shared<Backend>(Backend::rep_q8());
    for (int i = 0; i < b->rank(); ++i)
        if (b->simple_dim(i) == 2) return center_from_backend_object(b, b->simple_obj(i));
    throw std::logic_error("rep_q8 has no 2-dimensional simple");
}

namespace {

std::string adj_str(const std::vector<std::vector<int>>& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) {
        os << (i ? ";" : "");
        for (size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    }
    os << "]";
    return os.str();
}

bool is_loops(const std::vector<std::vector<int>>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

Report drinfeld_fixture_suite() {
    Report rep;
    rep.suite = "drinfeld-fixtures";

    // unit -> jordan loops on every backend
    std::vector<BackendPtr> backends;
    for (int n = 2; n <= 6; ++n)
        backends.push_back(std::make_shared<Backend>(Backend::pointed_cyclic(n)));
    backends.push_back(std::make_shared<Backend>(Backend::rep_z2_sl2()));
    backends.push_back(std::make_shared<Backend>(Backend::rep_z3_sl2()));
    backends.push_back(std::make_shared<Backend>(Backend::rep_q8()));
    bool loops_ok = true;
    for (const auto& b : backends)
        if (!is_loops(drinfeld_quiver(center_unit(b)).quiver.adjacency())) loops_ok = false;
    rep.add("unit gives jordan loops on every backend", loops_ok);

    for (int n = 2; n <= 6; ++n) {
        auto adj = drinfeld_quiver(setup_pointed_cycle(n)).quiver.adjacency();
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                    (j == (i + 1) % n ? 1 : 0))
                    ok = false;
        rep.add("pointed Z/" + std::to_string(n) + " cycle", ok, adj_str(adj));
    }

    {
        auto z = setup_rep_z2_v();
        auto adj = drinfeld_quiver(z).quiver.adjacency();
        int u = z.backend->unit_simple();
        bool ok = adj[static_cast<size_t>(u)][static_cast<size_t>(1 - u)] == 2 &&
                  adj[static_cast<size_t>(1 - u)][static_cast<size_t>(u)] == 2 &&
                  adj[static_cast<size_t>(u)][static_cast<size_t>(u)] == 0 &&
                  adj[static_cast<size_t>(1 - u)][static_cast<size_t>(1 - u)] == 0;
        rep.add("rep(Z/2 in SL2) fundamental object", ok, adj_str(adj));
    }
    {
        auto adj = drinfeld_quiver(setup_rep_z3_v()).quiver.adjacency();
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (adj[static_cast<size_t>(i)][static_cast<size_t>(j)] != (i == j ? 0 : 1))
                    ok = false;
        rep.add("rep(Z/3 in SL2) fundamental object", ok, adj_str(adj));
    }
    {
        auto z = setup_rep_q8_v();
        auto adj = drinfeld_quiver(z).quiver.adjacency();
        const Backend& b = *z.backend;
        int v = -1;
        for (int i = 0; i < b.rank(); ++i)
            if (b.simple_dim(i) == 2) v = i;
        bool ok = true;
        for (int i = 0; i < b.rank(); ++i)
            for (int j = 0; j < b.rank(); ++j) {
                bool edge = (i == v) != (j == v);
                if (adj[static_cast<size_t>(i)][static_cast<size_t>(j)] != (edge ? 1 : 0)) ok = false;
            }
        rep.add("rep(Q8) fundamental object is the double of affine D4", ok, adj_str(adj));
    }
    return rep;
}

Report rank2_classification_suite() {
    Report rep;
    rep.suite = "rank2-classification";
    auto b = std::make_shared<Backend>(Backend::pointed_cyclic(2));
    int loops = 0, cycles = 0, other = 0;
    for (int grade = 0; grade < 2; ++grade) {
        for (int chi = 0; chi < 2; ++chi) {
            std::vector<Mat> c(2);
            c[0] = Mat::identity(1);
            c[1] = Mat(1, 1, {Cyclotomic(chi ? -1 : 1)});
            CenterObject z = make_center_object_pointed(b, {grade}, c);
            auto adj = drinfeld_quiver(z).quiver.adjacency();
            if (adj == std::vector<std::vector<int>>{{1, 0}, {0, 1}}) ++loops;
            else if (adj == std::vector<std::vector<int>>{{0, 1}, {1, 0}}) ++cycles;
            else ++other;
        }
    }
    rep.add("four center simples enumerated", loops + cycles + other == 4);
    rep.add("exactly two give the two-loop quiver", loops == 2, std::to_string(loops));
    rep.add("exactly two give the 2-cycle", cycles == 2, std::to_string(cycles));
    return rep;
}

Report monoidal_suite(const CenterObject& z, uint64_t seed, int trials) {
    Report rep;
    rep.suite = "monoidal";
    DrinfeldQuiver dq = drinfeld_quiver(z);
    int assoc = 0, units = 0, balance = 0, duals = 0, nilclose = 0, errors = 0;
    std::vector<std::string> notes(static_cast<size_t>(trials));
#ifdef FUSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : assoc, units, balance, duals, nilclose, errors)
#endif
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(t));
        try {
            CatModule m1 = random_module(z, 2, rng);
            CatModule m2 = random_module(z, 2, rng);
            CatModule m3 = random_module(z, 1 + static_cast<int>(rng.next_range(2)), rng);
            if (fuse(fuse(m1, m2), m3).f != fuse(m1, fuse(m2, m3)).f) ++assoc;
            CatModule u = unit_module(z);
            if (fuse(m1, u).f != m1.f || fuse(u, m1).f != m1.f) ++units;
            if (fuse(m1, m2).f != act(m1, m2.a, Side::right).f + act(m2, m1.a, Side::left).f)
                ++balance;
            dual_modules(m1);  // throws unless the duality equations vanish
            dual_modules(m2);
            // locally nilpotent closure
            CatModule n1 = random_module(z, 2, rng, true);
            CatModule n2 = random_module(z, 2, rng, true);
            auto check_nil = [&](const CatModule& m) {
                return is_locally_nilpotent(dq.quiver, to_quiver_module(dq, m), 64).verdict ==
                       NilpotenceResult::Verdict::yes;
            };
            if (!check_nil(n1) || !check_nil(n2) || !check_nil(fuse(n1, n2)) ||
                !check_nil(dual_modules(n1).right) || !check_nil(dual_modules(n1).left))
                ++nilclose;
        } catch (const std::exception& e) {
            ++errors;
            notes[static_cast<size_t>(t)] = e.what();
        }
    }
    rep.add("strict associativity", assoc == 0, std::to_string(trials) + " trials");
    rep.add("unit laws", units == 0);
    rep.add("bimodule balance", balance == 0);
    std::string err;
    for (const auto& n : notes)
        if (!n.empty()) {
            err = n;
            break;
        }
    rep.add("duality equations", duals == 0 && errors == 0, err);
    rep.add("locally nilpotent closure", nilclose == 0);
    return rep;
}

Report qbinomial_suite(int max_n) {
    Report rep;
    rep.suite = "q-binomial";
    bool vanish = true, nonzero_edges = true;
    for (int n = 2; n <= max_n; ++n) {
        Cyclotomic q = Cyclotomic::root_of_unity(n, 1);
        for (int k = 1; k < n; ++k)
            if (!q_binomial(n, k).eval(q).is_zero()) vanish = false;
        if (q_binomial(n, 0).eval(q) != Cyclotomic(1) ||
            q_binomial(n, n).eval(q) != Cyclotomic(1))
            nonzero_edges = false;
    }
    rep.add("middle binomials vanish at primitive roots", vanish,
            "n = 2.." + std::to_string(max_n));
    rep.add("edge binomials are 1", nonzero_edges);
    bool collect = true;
    for (int n = 1; n <= max_n; ++n) {
        auto coeffs = fuse_expansion_coefficients(n);
        for (int i = 0; i <= n; ++i)
            if (!(coeffs[static_cast<size_t>(i)] == q_binomial(n, i))) collect = false;
    }
    rep.add("fusion expansion coefficients are the Gaussian binomials", collect);
    return rep;
}

Report relation_suite(const Relation& r, uint64_t seed, int trials, long expected_quotient,
                      int quotient_cap) {
    Report rep;
    rep.suite = "relation";
    auto val = validate_q_relation(r);
    rep.add("q-relation validates", val.ok, val.message);
    if (!val.ok) return rep;
    auto closure = closure_suite(r, seed, trials);
    std::string detail = std::to_string(closure.trials) + " trials";
    if (!closure.counterexamples.empty()) {
        detail = closure.counterexamples.front();
        // embed the offending modules, regenerated from the trial seed
        try {
            DrinfeldQuiver dq = drinfeld_quiver(r.z);
            auto solve_set = find_solve_arrows(r, dq);
            Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(closure.failing_trials.front()));
            std::vector<int> dims(dq.quiver.n_vertices);
            for (int& d : dims) d = 1 + static_cast<int>(rng.next_range(2));
            CatModule m1 = random_constrained_module(r, dq, solve_set, dims, rng);
            CatModule m2 = random_constrained_module(r, dq, solve_set, dims, rng);
            detail += " | m1 = " + to_json(m1).dump() + " | m2 = " + to_json(m2).dump();
        } catch (const std::exception&) {
        }
    }
    rep.add("closure under fusion and duals", closure.ok(), detail);
    if (expected_quotient >= 0) {
        auto qd = quotient_dim_up_to(r, drinfeld_quiver(r.z), quotient_cap);
        rep.add("quotient dimension", qd.finite && qd.dim == expected_quotient,
                "computed " + std::to_string(qd.dim) + ", expected " +
                    std::to_string(expected_quotient));
    }
    return rep;
}

namespace {

Report prepro_closure_part(const CenterObject& dx, const Mat& phi, uint64_t seed, int trials,
                           bool lean_dims = false) {
    Report rep;
    Relation r;
    r.z = dx;
    r.y = center_unit(dx.backend);
    r.length = 2;
    r.phi = phi;
    DrinfeldQuiver dq = drinfeld_quiver(dx);
    Relation rq = r;  // same relation, solved on the full double quiver
    auto solve_set = find_solve_arrows(rq, dq);
    if (solve_set.empty()) {
        rep.add("pi-module closure", false, "no linear parametrization");
        return rep;
    }
    int failures = 0, errors = 0;
    std::string note;
#ifdef FUSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : failures, errors)
#endif
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(t));
        std::vector<int> dims(dq.quiver.n_vertices, 1);
        if (lean_dims) {
            // one vertex of dimension 2 keeps the fused carriers tractable
            dims[static_cast<size_t>(rng.next_range(dq.quiver.n_vertices))] = 2;
        } else {
            for (int& d : dims) d = 1 + static_cast<int>(rng.next_range(2));
        }
        try {
            CatModule m1 = random_constrained_module(rq, dq, solve_set, dims, rng);
            CatModule m2 = random_constrained_module(rq, dq, solve_set, dims, rng);
            if (!satisfies_relation(rq, fuse(m1, m2))) ++failures;
            DualPair d1 = dual_modules(m1);
            if (!satisfies_relation(rq, d1.right) || !satisfies_relation(rq, d1.left)) ++failures;
            // mixed product: centralizer module against another solution
            if (!satisfies_relation(rq, fuse(m2, m1))) ++failures;
        } catch (const std::exception&) {
            ++errors;
        }
    }
    rep.add("pi-module closure under fusion, duals, mixed products",
            failures == 0 && errors == 0,
            std::to_string(trials) + " trials" + (errors ? ", sampler errors" : ""));
    return rep;
}

}  // namespace

Report prepro_suite(uint64_t seed, int trials) {
    Report rep;
    rep.suite = "preprojective";

    // (a) rep(Q8): FS(V) = -1, twist 1, Darboux identification
    {
        auto z = setup_rep_q8_v();
        const Backend& b = *z.backend;
        int v = -1;
        for (int i = 0; i < b.rank(); ++i)
            if (b.simple_dim(i) == 2) v = i;
        auto piv = b.pivotal_data(v);
        rep.add("rep(Q8) V: FS = -1 and twist = 1",
                piv.fs == -1 && piv.twist == Cyclotomic(1));
        Mat phi0 = b.hom_basis(b.dual(z.z), z.z).at(0);
        Relation r = self_dual_relation(z, phi0);
        rep.add("self-dual length-2 relation validates (q = -1)", validate_q_relation(r).ok);
        DrinfeldQuiver dq = drinfeld_quiver(z);
        bool darboux_ok = true, gens_ok = true;
        std::string note;
        try {
            SymplecticArrowSpace sym = darboux_basis(dq, phi0);
            for (size_t a = 0; a < dq.arrows.size(); ++a) {
                const auto& A = dq.quiver.arrows[a];
                Cyclotomic d = symplectic_pairing(z, phi0, A.src, A.dst, sym.basis[a],
                                                  sym.basis[static_cast<size_t>(sym.partner[a])]);
                if (sym.positive[a] && d != Cyclotomic(1)) darboux_ok = false;
                if (!sym.positive[a] && d != Cyclotomic(-1)) darboux_ok = false;
            }
            auto gens = ideal_generators(r, dq, &sym.basis);
            PairedArrowBasis pairs;
            pairs.basis = sym.basis;
            pairs.bar = sym.partner;
            pairs.plain.assign(sym.positive.begin(), sym.positive.end());
            auto classical = twisted_generators_on(dq, pairs, Cyclotomic(1));
            if (gens.size() != classical.size()) gens_ok = false;
            for (size_t i = 0; gens_ok && i < gens.size(); ++i) {
                PathVector expect = classical[i];
                expect *= Cyclotomic(Rational(1, b.simple_dim(static_cast<int>(i))));
                if (!(gens[i] == expect)) gens_ok = false;
            }
        } catch (const std::exception& e) {
            darboux_ok = gens_ok = false;
            note = e.what();
        }
        rep.add("darboux basis with unit pairings", darboux_ok, note);
        rep.add("relation ideal equals the classical generators up to 1/d_i", gens_ok);
    }

    // (b) pointed Z/n twisted identification, (c) sign lemma
    for (int n : {2, 3, 4}) {
        auto b = std::make_shared<Backend>(Backend::pointed_cyclic(n));
        Obj x = b->simple_obj(1);
        CenterObject dx = double_object(b, x);
        Mat phi = canonical_phi(b, x);
        rep.add("sign lemma over pointed Z/" + std::to_string(n),
                matmul(half_braiding_on(dx, dx.z), phi) == -phi);
        DrinfeldQuiver dq;
        PairedArrowBasis basis;
        auto gens = twisted_prepro_from_phi(b, x, &dq, &basis);
        auto expect = twisted_generators_on(dq, basis, b->pivotal_data(1).twist);
        bool ok = gens.size() == expect.size();
        for (size_t i = 0; ok && i < gens.size(); ++i)
            if (!(gens[i] == expect[i])) ok = false;
        rep.add("twisted generators over pointed Z/" + std::to_string(n) + " (theta = zeta)", ok);
    }
    {
        auto b = setup_rep_q8_v().backend;
        int v = -1;
        for (int i = 0; i < b->rank(); ++i)
            if (b->simple_dim(i) == 2) v = i;
        Obj x = b->simple_obj(v);
        CenterObject dx = double_object(b, x);
        Mat phi = canonical_phi(b, x);
        rep.add("sign lemma over rep(Q8)", matmul(half_braiding_on(dx, dx.z), phi) == -phi);
    }

    // (d) closure of canonical-phi modules over the centralizer double:
    // the twisted pointed case at full trial count, the symmetric rep(Q8)
    // case (heavier carriers) at a tenth
    {
        auto b = std::make_shared<Backend>(Backend::pointed_cyclic(3));
        Obj x = b->simple_obj(1);
        CenterObject dx = double_object(b, x);
        Report part = prepro_closure_part(dx, canonical_phi(b, x), seed, trials);
        for (auto& it : part.items) {
            it.name += " (pointed Z/3)";
            rep.items.push_back(std::move(it));
        }
    }
    {
        auto b = setup_rep_q8_v().backend;
        int v = -1;
        for (int i = 0; i < b->rank(); ++i)
            if (b->simple_dim(i) == 2) v = i;
        Obj x = b->simple_obj(v);
        CenterObject dx = double_object(b, x);
        Report part = prepro_closure_part(dx, canonical_phi(b, x), seed + 1,
                                          std::max(1, trials / 10), /*lean_dims=*/true);
        for (auto& it : part.items) {
            it.name += " (rep(Q8))";
            rep.items.push_back(std::move(it));
        }
    }
    return rep;
}

Report moduli_suite(const CenterObject& z, uint64_t seed, int trials) {
    Report rep;
    rep.suite = "moduli";
    // small epsilon/kappa table from the first trials of the batch
    {
        std::ostringstream table;
        for (int t = 0; t < std::min(trials, 4); ++t) {
            Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(t));
            CatModule m1 = random_module(z, 2, rng);
            CatModule m2 = random_module(z, 2, rng);
            table << (t ? "; " : "") << "t" << t << ": eps=" << epsilon(m1) << ","
                  << epsilon(m2) << " kappa=" << kappa(m1, m2);
        }
        rep.add("epsilon/kappa table", true, table.str());
    }
    int eps_cycle = 0, eps_dd = 0, eps_pos = 0, grading = 0, errors = 0;
#ifdef FUSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : eps_cycle, eps_dd, eps_pos, grading, errors)
#endif
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(t));
        try {
            CatModule m1 = random_module(z, 2, rng);
            CatModule m2 = random_module(z, 2, rng);
            CatModule dd1 = duality_D(duality_D(m1));
            if (epsilon(fuse(m1, m2)) != epsilon(fuse(m2, dd1))) ++eps_cycle;
            if (epsilon(dd1) != epsilon(m1)) ++eps_dd;
            if (epsilon(fuse(m1, duality_D(m1))) < 1) ++eps_pos;
            GradedClass c1 = graded_class(m1), c2 = graded_class(m2);
            GradedClass p = graded_mul(c1, c2);
            if (p.dim_vector != gr_product(*z.backend, c1.dim_vector, c2.dim_vector) ||
                p.dim_vector != graded_class(p.rep).dim_vector)
                ++grading;
        } catch (const std::exception&) {
            ++errors;
        }
    }
    rep.add("eps(fg) = eps(g D^2 f)", eps_cycle == 0, std::to_string(trials) + " trials");
    rep.add("eps(D^2 f) = eps(f)", eps_dd == 0);
    rep.add("eps(f D f) >= 1", eps_pos == 0);
    rep.add("graded multiplication matches the grothendieck product", grading == 0);
    rep.add("no trial errors", errors == 0);
    return rep;
}

Report dictionary_suite(uint64_t seed, int trials) {
    Report rep;
    rep.suite = "dictionary";
    std::vector<CenterObject> zs{setup_pointed_cycle(2), setup_pointed_cycle(3), setup_rep_q8_v()};
    int roundtrip = 0, mult = 0, errors = 0;
    for (const auto& z : zs) {
        DrinfeldQuiver dq = drinfeld_quiver(z);
        int per = trials / static_cast<int>(zs.size()) + 1;
#ifdef FUSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : roundtrip, mult, errors)
#endif
        for (int t = 0; t < per; ++t) {
            Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(t));
            try {
                CatModule m = random_module(z, 2, rng);
                auto qm = to_quiver_module(dq, m);
                CatModule back = from_quiver_module(dq, qm);
                if (back.f != m.f || to_quiver_module(dq, back) != qm) ++roundtrip;
                // path multiplicativity on random composable paths
                for (int rep_i = 0; rep_i < 3; ++rep_i) {
                    int i = static_cast<int>(rng.next_range(dq.quiver.n_vertices));
                    for (int mid = 0; mid < dq.quiver.n_vertices; ++mid)
                        for (const Path& p1 : enumerate_basic_paths(dq.quiver, 1, i, mid))
                            for (int j = 0; j < dq.quiver.n_vertices; ++j)
                                for (const Path& p2 : enumerate_basic_paths(dq.quiver, 1, mid, j)) {
                                    Path comp = p1;
                                    comp.arrows.insert(comp.arrows.end(), p2.arrows.begin(),
                                                       p2.arrows.end());
                                    if (path_action(dq.quiver, qm, comp) !=
                                        matmul(path_action(dq.quiver, qm, p2),
                                               path_action(dq.quiver, qm, p1)))
                                        ++mult;
                                }
                }
            } catch (const std::exception&) {
                ++errors;
            }
        }
    }
    rep.add("quiver dictionary round-trips", roundtrip == 0);
    rep.add("path actions are multiplicative", mult == 0);

    // pi-module condition vs generator actions
    {
        Rng rng(seed ^ 0xabcdef);
        Quiver base = build_quiver({{0, 1}, {1, 0}});
        DoubleQuiver d = double_quiver(base);
        int mismatches = 0;
        for (int t = 0; t < trials; ++t) {
            Cyclotomic theta =
                rng.next_range(2) ? Cyclotomic(1) : Cyclotomic::root_of_unity(4, 1);
            auto gens = preprojective_generators(d, theta);
            QuiverModule m;
            m.dims = {2, 2};
            for (size_t a = 0; a < d.dq.arrows.size(); ++a) {
                Mat f(2, 2);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) f.at(i, j) = rng.small_scalar(4);
                m.maps.push_back(std::move(f));
            }
            bool vanish = true;
            for (const auto& g : gens)
                if (!path_action(d.dq, m, g).is_zero()) vanish = false;
            if (vanish != is_pi_module(d, m, theta)) ++mismatches;
        }
        rep.add("pi-module condition equals generator vanishing", mismatches == 0);
    }

    // relation satisfaction vs ideal generator actions
    {
        Relation r = taft_relation(3, Cyclotomic::root_of_unity(3, 1));
        DrinfeldQuiver dq = drinfeld_quiver(r.z);
        auto gens = ideal_generators(r, dq);
        Rng rng(seed ^ 0x5eed);
        int mismatches = 0;
        for (int t = 0; t < trials; ++t) {
            CatModule m = random_module(r.z, 2, rng);
            auto qm = to_quiver_module(dq, m);
            bool vanish = true;
            for (const auto& g : gens)
                if (!path_action(dq.quiver, qm, g).is_zero()) vanish = false;
            if (vanish != satisfies_relation(r, m)) ++mismatches;
        }
        rep.add("relation satisfaction equals ideal-generator vanishing", mismatches == 0);
    }
    rep.add("no trial errors", errors == 0);
    return rep;
}

}  // namespace fusq
