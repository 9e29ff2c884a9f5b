#pragma once

#include "modschwarz/error.hpp"
#include "modschwarz/hypergeometric.hpp"
#include "modschwarz/modular_forms.hpp"
#include "modschwarz/numeric.hpp"
#include "modschwarz/puiseux.hpp"
#include "modschwarz/qseries.hpp"
#include "modschwarz/rational.hpp"
#include "modschwarz/schwarzian.hpp"
#include "modschwarz/vvmf.hpp"
