#pragma once

// JSON and LaTeX forms of radical numbers, presentations and matrix bases.
// JSON is lossless; decimal output is display only.

#include "rba/matrix_model.hpp"
#include "rba/rba_core.hpp"

#include <json.hpp>

#include <string>

namespace rba {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [{num, den, rad}, ...] with integers as decimal strings; zero is [].
Json to_json(const RadicalNumber& x);
/// Accepts integers as JSON numbers or strings; radicands need not be square-free.
RadicalNumber radical_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {d, star, lambda: [{i,j,k,value}]} with only nonzero entries listed.
Json to_json(const RbaPresentation& pres);
RbaPresentation presentation_from_json(const Json& j);

Json to_json(const DegreeMap& delta);
DegreeMap degree_map_from_json(const Json& j);

/// {shape, elements}: each element is a list of blocks, each block a list of rows.
Json to_json(const MatrixBasis& basis);
MatrixBasis basis_from_json(const Json& j);

std::string latex(const RadicalNumber& x);
/// bmatrix with the common denominator factored out, e.g. \frac{1}{9}\begin{bmatrix}...
std::string latex(const Matrix& m);
/// b_i = (block, block, ...) one line per element.
std::string latex(const MatrixBasis& basis);
/// λ_ijk = value lines grouped by equal values, in the style
/// λ_134 = λ_143 = ... = value.
std::string latex_lambda_table(const RbaPresentation& pres);

std::string decimal(const Matrix& m, int digits);
std::string decimal(const MatrixBasis& basis, int digits);
std::string decimal_lambda_table(const RbaPresentation& pres, int digits);

}  // namespace rba
