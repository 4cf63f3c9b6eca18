#pragma once

#include "quadharm/rational.hpp"
#include "quadharm/monomial.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/polynomial_io.hpp"
#include "quadharm/enclosures.hpp"
#include "quadharm/pi_scaled.hpp"
#include "quadharm/sphere.hpp"
#include "quadharm/upoly.hpp"
#include "quadharm/jacobi.hpp"
#include "quadharm/harmonics.hpp"
#include "quadharm/blocks.hpp"
#include "quadharm/quadric.hpp"
#include "quadharm/linsolve.hpp"
#include "quadharm/fischer.hpp"
#include "quadharm/random_poly.hpp"
#include "quadharm/parallel.hpp"
#include "quadharm/boundgrid.hpp"
#include "quadharm/report.hpp"
