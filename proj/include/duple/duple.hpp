#pragma once

#include "duple/rational.hpp"
#include "duple/quadext.hpp"
#include "duple/modular.hpp"
#include "duple/monomial.hpp"
#include "duple/polynomial.hpp"
#include "duple/sparse_rank.hpp"
#include "duple/milnor.hpp"
#include "duple/quotient_basis.hpp"
#include "duple/picard.hpp"
#include "duple/seshadri.hpp"
#include "duple/report_json.hpp"
