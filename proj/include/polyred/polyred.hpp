#ifndef POLYRED_POLYRED_HPP
#define POLYRED_POLYRED_HPP

// Umbrella header: exact-rational redundancy removal, minimum representation,
// and Fourier-Motzkin projection for H/V polyhedron descriptions.

#include "polyred/check.hpp"
#include "polyred/clarkson.hpp"
#include "polyred/classify.hpp"
#include "polyred/fourier_motzkin.hpp"
#include "polyred/io.hpp"
#include "polyred/linalg.hpp"
#include "polyred/minrep.hpp"
#include "polyred/oracle.hpp"
#include "polyred/parallel.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/rational.hpp"
#include "polyred/report.hpp"
#include "polyred/row.hpp"
#include "polyred/simplex.hpp"
#include "polyred/verify.hpp"
#include "polyred/vertex_projection.hpp"

#endif  // POLYRED_POLYRED_HPP
