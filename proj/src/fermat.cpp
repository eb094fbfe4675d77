#include "jacring/fermat.hpp"

#include <algorithm>
#include <sstream>

namespace jacring::fermat {

namespace {

const GF kField;

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (sgn(x) == 0) return Rational(0);
    Integer num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/// Particular solution of A x = b over Q(i); empty when inconsistent.
std::optional<std::vector<GQ>> solve_consistent(const Matrix<GF>& A, const std::vector<GQ>& b) {
    Matrix<GF> aug(kField, A.rows, A.cols + 1);
    for (std::size_t r = 0; r < A.rows; ++r) {
        for (std::size_t c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    RrefResult<GF> rr = rref(kField, aug);
    std::vector<GQ> x(A.cols, kField.zero());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        if (rr.pivot_cols[i] == A.cols) return std::nullopt;  // pivot in the constant column
        x[rr.pivot_cols[i]] = rr.mat.at(i, A.cols);
    }
    return x;
}

Matrix<GF> matrix_with_columns(const std::vector<Point>& cols) {
    Matrix<GF> m(kField, 5, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < 5; ++r) m.at(r, c) = cols[c][r];
    return m;
}

std::size_t rank_of_points(const std::vector<Point>& pts) {
    Matrix<GF> m(kField, pts.size(), 5);
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < 5; ++c) m.at(r, c) = pts[r][c];
    return rank(kField, m);
}

Point scale_point(const Point& p, const GQ& s) {
    Point out;
    for (int i = 0; i < 5; ++i) out[i] = p[i] * s;
    return out;
}

Point add_points(const Point& a, const Point& b) {
    Point out;
    for (int i = 0; i < 5; ++i) out[i] = a[i] + b[i];
    return out;
}

bool is_zero_point(const Point& p) {
    for (const GQ& x : p)
        if (!x.is_zero()) return false;
    return true;
}

GQ dot(const Point& a, const Point& b) {
    GQ s = kField.zero();
    for (int i = 0; i < 5; ++i) s = s + a[i] * b[i];
    return s;
}

Point gradient_of_cubic(const Point& at) {
    Point g;
    for (int i = 0; i < 5; ++i) g[i] = GQ(3) * at[i] * at[i];
    return g;
}

GQ eval_cubic(const Point& at) {
    GQ s = kField.zero();
    for (int i = 0; i < 5; ++i) s = s + at[i] * at[i] * at[i];
    return s;
}

std::array<GQ, 3> binary_coords(const Poly<GF>& f) {
    // coefficients of u^2, uv, v^2 in a 2-variable quadric
    std::array<GQ, 3> out{kField.zero(), kField.zero(), kField.zero()};
    for (const auto& [m, c] : f.terms()) {
        if (m.exps[0] == 2) out[0] = c;
        else if (m.exps[0] == 1 && m.exps[1] == 1) out[1] = c;
        else if (m.exps[1] == 2) out[2] = c;
        else throw ContractError("not a binary quadric");
    }
    return out;
}

}  // namespace

Poly<GF> diagonal_cubic() {
    Poly<GF> f(5);
    for (int i = 0; i < 5; ++i) {
        Monomial m(5);
        m.exps[i] = 3;
        f.add_term(kField, m, kField.one());
    }
    return f;
}

Point conjugate(const Point& p) {
    Point out;
    for (int i = 0; i < 5; ++i) out[i] = p[i].conj();
    return out;
}

Point normalize_point(const Point& p) {
    for (int i = 0; i < 5; ++i) {
        if (!p[i].is_zero()) return scale_point(p, kField.inv(p[i]));
    }
    throw ContractError("cannot normalize the zero point");
}

bool points_projectively_equal(const Point& a, const Point& b) {
    if (is_zero_point(a) || is_zero_point(b)) return false;
    Point na = normalize_point(a), nb = normalize_point(b);
    for (int i = 0; i < 5; ++i)
        if (na[i] != nb[i]) return false;
    return true;
}

std::optional<GQ> gaussian_sqrt(const GQ& t) {
    if (t.is_zero()) return GQ(0);
    if (t.im == 0) {
        if (auto r = rational_sqrt(t.re)) return GQ(*r);
        if (auto r = rational_sqrt(-t.re)) return GQ(Rational(0), *r);  // (ri)^2 = -r^2
        return std::nullopt;
    }
    auto norm_root = rational_sqrt(t.norm());
    if (!norm_root) return std::nullopt;
    // x^2 - y^2 = re and x^2 + y^2 = |t| force x^2 = (re + |t|)/2.
    auto x = rational_sqrt((t.re + *norm_root) / 2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = t.im / (2 * (*x));
    GQ root(*x, y);
    if (root * root == t) return root;
    return std::nullopt;
}

namespace {
/// Canonical choice among {s, -s}: positive real part, else positive imaginary.
GQ canonical_sign(const GQ& s) {
    if (sgn(s.re) < 0 || (sgn(s.re) == 0 && sgn(s.im) < 0)) return -s;
    return s;
}
}  // namespace

ConeLine cone_line(const GQ& a, const GQ& b, const GQ& c) {
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw ContractError("base point must be a point of the plane cubic, not the origin");
    GQ cubic = a * a * a + b * b * b + c * c * c;
    if (!cubic.is_zero())
        throw ContractError("base point is not on the cubic a^3 + b^3 + c^3 = 0 (value " +
                            to_string(cubic) + ")");
    ConeLine line;
    line.a = a;
    line.b = b;
    line.c = c;
    line.linear_sum_zero = (a + b + c).is_zero();
    line.vertex = {GQ(1), GQ(-1), GQ(0), GQ(0), GQ(0)};
    line.base = {GQ(0), GQ(0), a, b, c};

    Monomial u(2), v(2);
    u.exps[0] = 1;
    v.exps[1] = 1;
    line.phi[0] = Poly<GF>::term(kField, u, GQ(1));
    line.phi[1] = Poly<GF>::term(kField, u, GQ(-1));
    line.phi[2] = Poly<GF>::term(kField, v, a);
    line.phi[3] = Poly<GF>::term(kField, v, b);
    line.phi[4] = Poly<GF>::term(kField, v, c);

    // the pullback of the cubic along phi is (a^3+b^3+c^3) v^3, zero here
    Poly<GF> pullback = substitute(kField, diagonal_cubic(),
                                   std::vector<Poly<GF>>(line.phi.begin(), line.phi.end()));
    if (!pullback.is_zero()) throw ContractError("line does not lie on the hypersurface");
    return line;
}

void SymQuadric::set(int i, int j, GQ value) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > 4) throw ContractError("quadric index out of range");
    if (value.is_zero()) coeffs_.erase({i, j});
    else coeffs_[{i, j}] = std::move(value);
}

GQ SymQuadric::get(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? GQ(0) : it->second;
}

Poly<GF> SymQuadric::to_poly(const GF& k) const {
    Poly<GF> p(5);
    for (const auto& [ij, c] : coeffs_) {
        Monomial m(5);
        m.exps[ij.first] += 1;
        m.exps[ij.second] += 1;
        p.add_term(k, m, c);
    }
    return p;
}

const std::vector<std::pair<int, int>>& SymQuadric::offdiagonal_slots() {
    static const std::vector<std::pair<int, int>> slots = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    return slots;
}

BinaryQuadric restrict_quadric(const SymQuadric& q, const ConeLine& line) {
    Poly<GF> restricted = substitute(kField, q.to_poly(kField),
                                     std::vector<Poly<GF>>(line.phi.begin(), line.phi.end()));
    auto coords = binary_coords(restricted);
    return BinaryQuadric{coords[0], coords[1], coords[2]};
}

GammaImage gamma_image_of(const std::array<Poly<GF>, 5>& phi) {
    GammaImage out;
    Matrix<GF> rows(kField, 5, 3);
    for (int i = 0; i < 5; ++i) {
        auto sq = binary_coords(poly_mul(kField, phi[i], phi[i]));
        out.generators.push_back(sq);
        for (int c = 0; c < 3; ++c) rows.at(i, c) = sq[c];
    }
    out.echelon = rref(kField, rows);
    out.dim = out.echelon.rank();
    out.cokernel_dim = 3 - out.dim;
    std::vector<GQ> uv = {GQ(0), GQ(1), GQ(0)};
    auto residue = reduce_against(kField, out.echelon, uv);
    out.uv_spans_cokernel = !residue[1].is_zero() && out.cokernel_dim == 1;
    return out;
}

GammaImage gamma_image(const ConeLine& line) { return gamma_image_of(line.phi); }

GQ obstruction_r(const SymQuadric& q, const ConeLine& line) {
    BinaryQuadric b = restrict_quadric(q, line);
    GammaImage gamma = gamma_image(line);
    std::vector<GQ> v = {b.cu2, b.cuv, b.cv2};
    v = reduce_against(kField, gamma.echelon, v);
    return v[1];  // coefficient of [uv] in the cokernel
}

std::vector<GQ> obstruction_functional(const ConeLine& line) {
    std::vector<GQ> values;
    for (auto [i, j] : SymQuadric::offdiagonal_slots()) {
        SymQuadric q;
        q.set(i, j, GQ(1));
        values.push_back(obstruction_r(q, line));
    }
    return values;
}

NormalKernel normal_kernel(const ConeLine& line) {
    NormalKernel out;
    const std::array<Point, 3> directions = {
        Point{GQ(1), GQ(1), GQ(0), GQ(0), GQ(0)},   // dz0 + dz1
        Point{GQ(0), GQ(0), GQ(1), GQ(1), GQ(0)},   // dz2 + dz3
        Point{GQ(0), GQ(0), GQ(0), GQ(0), GQ(1)}};  // dz4

    // direction w maps to sum_i 3 phi_i^2 w_i
    Matrix<GF> m(kField, 3, 3);
    for (int dir = 0; dir < 3; ++dir) {
        Poly<GF> img(2);
        for (int i = 0; i < 5; ++i) {
            if (directions[dir][i].is_zero()) continue;
            img = poly_add(kField, img,
                           poly_scale(kField, poly_mul(kField, line.phi[i], line.phi[i]),
                                      GQ(3) * directions[dir][i]));
        }
        out.images[dir] = binary_coords(img);
        for (int r = 0; r < 3; ++r) m.at(r, dir) = out.images[dir][r];
    }
    for (const auto& kv : nullspace(kField, m)) {
        std::array<GQ, 3> coeffs = {kv[0], kv[1], kv[2]};
        out.kernel.push_back(coeffs);
        Point amb = {GQ(0), GQ(0), GQ(0), GQ(0), GQ(0)};
        for (int dir = 0; dir < 3; ++dir)
            amb = add_points(amb, scale_point(directions[dir], coeffs[dir]));
        out.ambient.push_back(amb);
    }
    return out;
}

Poly<GF> restrict_to_plane(const Poly<GF>& form, const std::array<Point, 3>& plane) {
    if (rank_of_points({plane[0], plane[1], plane[2]}) != 3)
        throw ContractError("plane points are not in general position");
    std::vector<Poly<GF>> images;
    for (int i = 0; i < 5; ++i) {
        Poly<GF> img(3);
        for (int v = 0; v < 3; ++v) {
            Monomial m(3);
            m.exps[v] = 1;
            img.add_term(kField, m, plane[v][i]);
        }
        images.push_back(std::move(img));
    }
    return substitute(kField, form, images);
}

Poly<GF> factor_out_nu(const Poly<GF>& cubic_on_plane) {
    Poly<GF> q(3);
    for (const auto& [m, c] : cubic_on_plane.terms()) {
        if (m.exps[2] == 0)
            throw ContractError(
                "restriction is not divisible by the line coordinate: the plane does not contain "
                "a line of the hypersurface through its first two spanning points");
        Monomial mm = m;
        mm.exps[2] -= 1;
        q.add_term(kField, mm, c);
    }
    return q;
}

ResidualConic residual_conic(const ConeLine& line, const Point& extra) {
    ResidualConic out;
    out.plane = {line.vertex, line.base, extra};
    if (rank_of_points({line.vertex, line.base, extra}) != 3)
        throw ContractError("extra point lies on the line; it does not span a plane");

    out.q = factor_out_nu(restrict_to_plane(diagonal_cubic(), out.plane));

    // q at nu = 0
    out.q_on_line = {GQ(0), GQ(0), GQ(0)};
    for (const auto& [m, c] : out.q.terms()) {
        if (m.exps[2] != 0) continue;
        if (m.exps[0] == 2) out.q_on_line[0] = c;
        else if (m.exps[0] == 1) out.q_on_line[1] = c;
        else out.q_on_line[2] = c;
    }
    const GQ &qa = out.q_on_line[0], &qb = out.q_on_line[1], &qc = out.q_on_line[2];
    if (qa.is_zero() && qb.is_zero() && qc.is_zero())
        throw Error("the residual conic contains the line; intersection is not finite");

    // roots (lambda : mu) of qa t^2 + qb t + qc with t = lambda/mu
    std::vector<std::pair<GQ, GQ>> roots;
    if (qa.is_zero()) {
        roots.emplace_back(GQ(1), GQ(0));  // root at infinity
        if (!qb.is_zero()) roots.emplace_back(-qc / qb, GQ(1));
        else roots.emplace_back(GQ(1), GQ(0));  // double root at infinity
    } else {
        GQ disc = qb * qb - GQ(4) * qa * qc;
        auto s = gaussian_sqrt(disc);
        if (!s) throw FieldError("intersection points are not defined over Q(i)");
        GQ root = canonical_sign(*s);
        roots.emplace_back((-qb + root) / (GQ(2) * qa), GQ(1));
        roots.emplace_back((-qb - root) / (GQ(2) * qa), GQ(1));
    }
    for (int idx = 0; idx < 2; ++idx) {
        Point pt = add_points(scale_point(line.vertex, roots[idx].first),
                              scale_point(line.base, roots[idx].second));
        out.points[idx] = normalize_point(pt);
    }
    return out;
}

std::string linear_form_to_string(const LinearForm& f) {
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (f[i].is_zero()) continue;
        std::string coeff = to_string(f[i]);
        if (!s.empty()) s += " + ";
        s += "(" + coeff + ")*z" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

bool linear_form_qualifies(const LinearForm& f, const std::vector<Point>& vanish_at,
                           const Point& nonzero_at) {
    for (const Point& p : vanish_at) {
        if (!dot({f[0], f[1], f[2], f[3], f[4]}, p).is_zero()) return false;
    }
    return !dot({f[0], f[1], f[2], f[3], f[4]}, nonzero_at).is_zero();
}

std::optional<LinearForm> linear_form_search(const std::vector<Point>& vanish_at,
                                             const Point& nonzero_at) {
    Matrix<GF> constraints(kField, vanish_at.size(), 5);
    for (std::size_t r = 0; r < vanish_at.size(); ++r)
        for (int c = 0; c < 5; ++c) constraints.at(r, c) = vanish_at[r][c];
    for (const auto& sol : nullspace(kField, constraints)) {
        Point f = {sol[0], sol[1], sol[2], sol[3], sol[4]};
        GQ value = dot(f, nonzero_at);
        if (!value.is_zero()) {
            // scale so the first nonzero coefficient is 1
            for (int i = 0; i < 5; ++i) {
                if (!f[i].is_zero()) return scale_point(f, kField.inv(f[i]));
            }
        }
    }
    return std::nullopt;
}

WedgeDetail wedge_check_detail(const ConeLine& line, const Point& section, const Point& at,
                               const ResidualConic& conic, std::optional<Point> tangent_override,
                               unsigned complement_choice) {
    WedgeDetail out;
    out.determinant = kField.zero();
    out.component_determinant = kField.zero();

    if (!eval_cubic(at).is_zero()) throw ContractError("point is not on the hypersurface");
    if (rank_of_points({line.vertex, line.base, at}) != 2)
        throw ContractError("point is not on the line");

    Point grad = gradient_of_cubic(at);

    Point tangent;
    if (tangent_override) {
        tangent = *tangent_override;
    } else {
        // plane coordinates of the point
        auto coords = solve_consistent(matrix_with_columns({conic.plane[0], conic.plane[1], conic.plane[2]}),
                                       std::vector<GQ>(at.begin(), at.end()));
        if (!coords) throw ContractError("point is not on the plane of the conic");
        std::vector<GQ> pos = *coords;
        if (!poly_eval(kField, conic.q, pos).is_zero())
            throw ContractError("point is not on the residual conic");
        std::vector<GQ> gq(3);
        for (int v = 0; v < 3; ++v)
            gq[v] = poly_eval(kField, partial_derivative(kField, conic.q, v), pos);
        if (gq[0].is_zero() && gq[1].is_zero() && gq[2].is_zero())
            throw Error("residual conic is singular at the point");
        Matrix<GF> grow(kField, 1, 3);
        for (int v = 0; v < 3; ++v) grow.at(0, v) = gq[v];
        std::array<GQ, 3> t3{};
        bool found = false;
        for (const auto& cand : nullspace(kField, grow)) {
            // skip the direction of the point itself
            Matrix<GF> two(kField, 2, 3);
            for (int v = 0; v < 3; ++v) {
                two.at(0, v) = cand[v];
                two.at(1, v) = pos[v];
            }
            if (rank(kField, two) == 2) {
                t3 = {cand[0], cand[1], cand[2]};
                found = true;
                break;
            }
        }
        if (!found) throw Error("residual conic has no tangent direction at the point");
        tangent = {GQ(0), GQ(0), GQ(0), GQ(0), GQ(0)};
        for (int v = 0; v < 3; ++v)
            tangent = add_points(tangent, scale_point(conic.plane[v], t3[v]));
    }
    out.tangent = tangent;

    if (!dot(grad, tangent).is_zero())
        throw ContractError("conic tangent fails the gradient membership check");
    if (!dot(grad, section).is_zero())
        throw ContractError("section is not tangent to the hypersurface at the point");

    // complete {vertex, base} to a basis of T_at(X) = ker(grad)
    Matrix<GF> grow(kField, 1, 5);
    for (int i = 0; i < 5; ++i) grow.at(0, i) = grad[i];
    auto tx = nullspace(kField, grow);
    std::rotate(tx.begin(), tx.begin() + (complement_choice % tx.size()), tx.end());

    std::vector<Point> span_rows = {line.vertex, line.base};
    std::vector<Point> complement;
    for (const auto& cand : tx) {
        if (complement.size() == 2) break;
        Point w = {cand[0], cand[1], cand[2], cand[3], cand[4]};
        std::vector<Point> trial = span_rows;
        trial.push_back(w);
        if (rank_of_points(trial) == span_rows.size() + 1) {
            span_rows.push_back(w);
            complement.push_back(w);
        }
    }
    if (complement.size() != 2) throw Error("tangent space of the hypersurface is degenerate here");
    out.n_basis = {complement[0], complement[1]};

    // N-coordinates: solve [vertex base n1 n2] x = w, keep the last two entries
    Matrix<GF> basis_cols =
        matrix_with_columns({line.vertex, line.base, complement[0], complement[1]});
    auto project = [&](const Point& w) -> std::array<GQ, 2> {
        auto x = solve_consistent(basis_cols, std::vector<GQ>(w.begin(), w.end()));
        if (!x) throw ContractError("vector is not tangent to the hypersurface at the point");
        return {(*x)[2], (*x)[3]};
    };
    auto vN = project(section);
    auto tN = project(tangent);
    out.determinant = det2(kField, vN[0], tN[0], vN[1], tN[1]);
    out.nonzero = !out.determinant.is_zero();
    // recorded for comparison only: determinant of the (z4, z1) components
    out.component_determinant = det2(kField, section[4], tangent[4], section[1], tangent[1]);
    return out;
}

bool wedge_check(const ConeLine& line, const Point& section, const Point& at,
                 const ResidualConic& conic) {
    return wedge_check_detail(line, section, at, conic).nonzero;
}

FermatReport clemens_certificate(const ConeLine& line, const Point& extra,
                                 std::optional<Point> section_override) {
    FermatReport rep;
    rep.a = line.a;
    rep.b = line.b;
    rep.c = line.c;
    rep.cubic_condition = true;  // enforced by cone_line
    rep.linear_sum_zero = line.linear_sum_zero;
    rep.line_on_hypersurface = true;

    rep.functional = obstruction_functional(line);
    std::size_t nonzero = 0;
    for (const GQ& v : rep.functional) nonzero += v.is_zero() ? 0 : 1;
    rep.functional_kernel_codim = nonzero > 0 ? 1 : 0;

    GammaImage gamma = gamma_image(line);
    rep.gamma_dim = gamma.dim;
    rep.gamma_cokernel_dim = gamma.cokernel_dim;

    NormalKernel nk = normal_kernel(line);
    rep.normal_sections = nk.ambient;

    std::optional<Point> section = section_override;
    if (!section && !nk.ambient.empty()) section = nk.ambient[0];

    ResidualConic conic = residual_conic(line, extra);
    rep.conic_q = conic.q;
    rep.q_on_line = conic.q_on_line;

    if (!rep.linear_sum_zero)
        rep.notes.push_back("base point satisfies the cubic condition but not a + b + c = 0");

    // try both labelings of the intersection points as the separated point
    auto attempt = [&](const Point& cand_p0) -> std::optional<WedgeDetail> {
        if (!section) return std::nullopt;
        try {
            return wedge_check_detail(line, *section, cand_p0, conic);
        } catch (const Error& err) {
            rep.notes.push_back(std::string("wedge evaluation failed: ") + err.what());
            return std::nullopt;
        }
    };

    bool done = false;
    for (int first : {0, 1}) {
        const Point& cand_p0 = conic.points[first];
        const Point& cand_p1 = conic.points[1 - first];
        auto form = linear_form_search({cand_p1}, cand_p0);
        if (!form) continue;
        auto wd = attempt(cand_p0);
        if (wd && wd->nonzero) {
            rep.p0 = cand_p0;
            rep.p1 = cand_p1;
            rep.form = form;
            rep.wedge_nonzero = true;
            rep.wedge_determinant = wd->determinant;
            rep.component_determinant = wd->component_determinant;
            rep.certificate = true;
            done = true;
            break;
        }
    }
    if (!done) {
        rep.p0 = conic.points[0];
        rep.p1 = conic.points[1];
        auto form = linear_form_search({rep.p1}, rep.p0);
        rep.form = form;
        if (auto wd = attempt(rep.p0)) {
            rep.wedge_nonzero = wd->nonzero;
            rep.wedge_determinant = wd->determinant;
            rep.component_determinant = wd->component_determinant;
        }
        rep.certificate = false;
        rep.notes.push_back(rep.form ? "wedge condition failed"
                                     : "no separating linear form exists");
    }
    return rep;
}

namespace {
std::string point_to_string(const Point& p) {
    std::string s = "[";
    for (int i = 0; i < 5; ++i) {
        if (i) s += ":";
        s += to_string(p[i]);
    }
    return s + "]";
}
}  // namespace

std::string format_report(const FermatReport& rep) {
    std::ostringstream os;
    os << "cone line through (a,b,c) = (" << to_string(rep.a) << "," << to_string(rep.b) << ","
       << to_string(rep.c) << ")\n";
    os << "  on the cubic: yes   a+b+c = 0: " << (rep.linear_sum_zero ? "yes" : "no")
       << "   line on hypersurface: " << (rep.line_on_hypersurface ? "yes" : "no") << "\n";
    os << "  obstruction functional on z_i z_j (i<j):";
    const auto& slots = SymQuadric::offdiagonal_slots();
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (rep.functional[s].is_zero()) continue;
        os << " (" << to_string(rep.functional[s]) << ")*q" << slots[s].first << slots[s].second;
    }
    os << "\n  functional kernel codimension: " << rep.functional_kernel_codim << "\n";
    os << "  square-image dimension: " << rep.gamma_dim
       << "   cokernel dimension: " << rep.gamma_cokernel_dim << "\n";
    os << "  twisted normal sections:";
    for (const Point& s : rep.normal_sections) os << " " << point_to_string(s);
    os << "\n";
    os << "  residual quadric on the line (lambda^2, lambda*mu, mu^2): (" << to_string(rep.q_on_line[0])
       << ", " << to_string(rep.q_on_line[1]) << ", " << to_string(rep.q_on_line[2]) << ")\n";
    os << "  intersection points: p0 = " << point_to_string(rep.p0)
       << "  p1 = " << point_to_string(rep.p1) << "\n";
    os << "  separating linear form: " << (rep.form ? linear_form_to_string(*rep.form) : "none")
       << "\n";
    os << "  wedge determinant (intrinsic quotient): " << to_string(rep.wedge_determinant)
       << "   component convention: " << to_string(rep.component_determinant) << "\n";
    os << "  certificate: " << (rep.certificate ? "TRUE" : "FALSE") << "\n";
    for (const std::string& n : rep.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace jacring::fermat
