#pragma once

#include "octdirac/clifford.hpp"
#include "octdirac/errors.hpp"
#include "octdirac/g2.hpp"
#include "octdirac/io.hpp"
#include "octdirac/linalg.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/octonion.hpp"
#include "octdirac/pauli.hpp"
#include "octdirac/perturbation.hpp"
#include "octdirac/rational.hpp"
#include "octdirac/report.hpp"
#include "octdirac/sampling.hpp"
#include "octdirac/suites.hpp"
#include "octdirac/tables.hpp"
