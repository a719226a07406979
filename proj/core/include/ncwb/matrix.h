#pragma once
#include "ncwb/scalar.h"
#include <map>
#include <optional>
#include <vector>

namespace ncwb::matrix {

using scalar::CycloScalar;
using Vec = std::vector<CycloScalar>;

// v += c * w
void axpy(Vec &v, const CycloScalar &c, const Vec &w);

// Incrementally maintained row space in reduced row echelon form.
// Pivoting rule: first nonzero entry left-to-right, rows in insertion order;
// the stored basis is therefore deterministic for a fixed input sequence.
// With tracking enabled each basis row carries its expression as a linear
// combination of the original inserted rows.
class RowSpace {
public:
	explicit RowSpace(size_t cols, bool track = false) : cols_(cols), track_(track) {}

	// reduce and insert; returns true iff the row enlarged the space
	bool add(Vec row);

	size_t rank() const { return rows_.size(); }
	size_t cols() const { return cols_; }
	size_t inserted() const { return inserted_; }
	const std::vector<Vec> &rows() const { return rows_; }
	const std::map<size_t, size_t> &pivots() const { return pivots_; } // col -> row index
	// combination over original rows for basis row i (tracking only)
	const Vec &combo(size_t i) const;

	// residual of v after reduction against the space
	Vec reduce(Vec v) const;
	bool contains(const Vec &v) const;
	// if v lies in the space, coefficients over the *original* inserted rows
	// (tracking only)
	std::optional<Vec> express(const Vec &v) const;

private:
	size_t cols_;
	bool track_;
	size_t inserted_ = 0;
	std::vector<Vec> rows_;
	std::vector<Vec> combos_;
	std::map<size_t, size_t> pivots_;
};

// solve A x = b with A given row-major; deterministic; nullopt if inconsistent
std::optional<Vec> solve(const std::vector<Vec> &a, const Vec &b);

// basis of { x : R x = 0 } for constraint rows R over ncols unknowns
std::vector<Vec> nullspace(const std::vector<Vec> &constraints, size_t ncols);

bool is_zero(const Vec &v);

} // namespace ncwb::matrix
