#ifndef JACRING_FERMAT_HPP
#define JACRING_FERMAT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacring/fields.hpp"
#include "jacring/matrix.hpp"
#include "jacring/poly.hpp"

namespace jacring::fermat {

// Exact verification pipeline for lines on the cone over a plane cubic inside
// the diagonal cubic threefold in P^4, ending in the non-triviality
// certificate for the infinitesimal invariant at such a line.  Everything
// runs over Q(i).

using GQ = GaussianRational;
using GF = GaussianRationalField;
using Point = std::array<GQ, 5>;

Poly<GF> diagonal_cubic();  // z0^3 + z1^3 + z2^3 + z3^3 + z4^3 in 5 variables

Point conjugate(const Point& p);                    // i -> -i componentwise
Point normalize_point(const Point& p);              // first nonzero coordinate scaled to 1
bool points_projectively_equal(const Point& a, const Point& b);

/// Square root in Q(i) when one exists.
std::optional<GQ> gaussian_sqrt(const GQ& t);

/// A ruling line of the tangent-cone at the vertex [1:-1:0:0:0], joining the
/// vertex to the point [0:0:a:b:c] of the base cubic a^3 + b^3 + c^3 = 0.
/// Parametrized by phi(u,v) = (u, -u, av, bv, cv).
struct ConeLine {
    GQ a, b, c;
    bool linear_sum_zero = false;  // whether a + b + c = 0 as well (recorded, not required)
    Point vertex;                  // (1,-1,0,0,0)
    Point base;                    // (0,0,a,b,c)
    std::array<Poly<GF>, 5> phi;   // coordinate images in the 2 variables (u, v)
};

/// Validates the cubic condition and that the line lies on the threefold.
ConeLine cone_line(const GQ& a, const GQ& b, const GQ& c);

/// A binary quadric c_u2 u^2 + c_uv uv + c_v2 v^2.
struct BinaryQuadric {
    GQ cu2, cuv, cv2;
};

/// Symmetric quadric sum q_{ij} z_i z_j (i <= j); diagonal terms are allowed
/// and handled uniformly.
class SymQuadric {
  public:
    void set(int i, int j, GQ value);
    GQ get(int i, int j) const;
    Poly<GF> to_poly(const GF& k) const;
    /// The ten squarefree coefficient slots (i < j) in lexicographic order.
    static const std::vector<std::pair<int, int>>& offdiagonal_slots();

  private:
    std::map<std::pair<int, int>, GQ> coeffs_;
};

/// Exact coefficients of Q restricted to the line via phi.
BinaryQuadric restrict_quadric(const SymQuadric& q, const ConeLine& line);

/// Span of the squares phi_i^2 inside the binary quadrics.
struct GammaImage {
    std::vector<std::array<GQ, 3>> generators;  // the five squares, coords (u^2, uv, v^2)
    std::size_t dim = 0;
    std::size_t cokernel_dim = 0;
    RrefResult<GF> echelon;
    bool uv_spans_cokernel = false;
};

GammaImage gamma_image(const ConeLine& line);
GammaImage gamma_image_of(const std::array<Poly<GF>, 5>& phi);  // fixture access

/// Coefficient of the class [uv] of Q|_L in the cokernel of the square map.
GQ obstruction_r(const SymQuadric& q, const ConeLine& line);

/// Values of the obstruction functional on the ten squarefree quadric
/// monomials z_i z_j; its kernel codimension in that model is the number of
/// independent rows of this vector (0 or 1).
std::vector<GQ> obstruction_functional(const ConeLine& line);

/// Kernel of the map sending a constant normal direction to its pairing with
/// the differential of the cubic along the line.  Directions are expressed
/// in the basis {d0 = dz0+dz1, d1 = dz2+dz3, d2 = dz4}.
struct NormalKernel {
    std::array<std::array<GQ, 3>, 3> images;  // direction -> (u^2, uv, v^2)
    std::vector<std::array<GQ, 3>> kernel;    // coordinates in {d0, d1, d2}
    std::vector<Point> ambient;               // same vectors in the z-coordinates
};

NormalKernel normal_kernel(const ConeLine& line);

/// Restriction of the cubic to the plane through the line and `extra`,
/// with the line factor split off: F|_S = nu * q(lambda, mu, nu).
struct ResidualConic {
    std::array<Point, 3> plane;   // rows span: vertex, base point, extra
    Poly<GF> q;                   // ternary quadric in (lambda, mu, nu)
    std::array<GQ, 3> q_on_line;  // q at nu = 0: coefficients of lambda^2, lambda mu, mu^2
    std::array<Point, 2> points;  // intersection of {q = 0} with the line, normalized
};

ResidualConic residual_conic(const ConeLine& line, const Point& extra);

/// F restricted to the plane spanned by three points, as a cubic in
/// (lambda, mu, nu).
Poly<GF> restrict_to_plane(const Poly<GF>& form, const std::array<Point, 3>& plane);

/// Splits off the nu factor; throws when the restriction is not divisible,
/// i.e. the plane's (lambda, mu)-line does not lie on the hypersurface.
Poly<GF> factor_out_nu(const Poly<GF>& cubic_on_plane);

using LinearForm = std::array<GQ, 5>;

std::string linear_form_to_string(const LinearForm& f);
bool linear_form_qualifies(const LinearForm& f, const std::vector<Point>& vanish_at,
                           const Point& nonzero_at);
/// Solves for a linear form vanishing on `vanish_at` and not at `nonzero_at`.
std::optional<LinearForm> linear_form_search(const std::vector<Point>& vanish_at,
                                             const Point& nonzero_at);

/// Wedge test on the intrinsic quotient N = T_p(X)/T_p(L): project the
/// section and the conic tangent into N and test their 2x2 determinant.
/// The verdict does not depend on the basis of N, on the scaling of the
/// point, or on the tangent representative mod T_p(L).
struct WedgeDetail {
    bool nonzero = false;
    GQ determinant;                  // in the chosen basis of N
    Point tangent;                   // conic tangent used, in z-coordinates
    std::array<Point, 2> n_basis;    // completion of {p, z} inside T_p(X)
    GQ component_determinant;        // ad-hoc (z4, z1)-component convention, recorded only
};

WedgeDetail wedge_check_detail(const ConeLine& line, const Point& section, const Point& at,
                               const ResidualConic& conic,
                               std::optional<Point> tangent_override = std::nullopt,
                               unsigned complement_choice = 0);

bool wedge_check(const ConeLine& line, const Point& section, const Point& at,
                 const ResidualConic& conic);

struct FermatReport {
    // line
    GQ a, b, c;
    bool cubic_condition = false;
    bool linear_sum_zero = false;
    bool line_on_hypersurface = false;
    // obstruction functional on the squarefree quadric model
    std::vector<GQ> functional;          // ten values, slots as in SymQuadric
    std::size_t functional_kernel_codim = 0;
    std::size_t gamma_dim = 0, gamma_cokernel_dim = 0;
    // twisted normal sections
    std::vector<Point> normal_sections;  // ambient kernel basis
    // residual conic
    Poly<GF> conic_q;
    std::array<GQ, 3> q_on_line{};       // lambda^2, lambda mu, mu^2 coefficients
    Point p0, p1;                        // p0 = point carrying the non-vanishing form
    // certificate data
    std::optional<LinearForm> form;      // vanishes at p1, not at p0
    bool wedge_nonzero = false;
    GQ wedge_determinant;
    GQ component_determinant;
    bool certificate = false;
    std::vector<std::string> notes;
};

/// Runs the full pipeline; the certificate holds when a separating linear
/// form exists and the wedge at the separated point is nonzero.  The section
/// override exists for failure-path fixtures.
FermatReport clemens_certificate(const ConeLine& line, const Point& extra,
                                 std::optional<Point> section_override = std::nullopt);

std::string format_report(const FermatReport& rep);

}  // namespace jacring::fermat

#endif
