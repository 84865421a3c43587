#pragma once

#include "rrq/numerics.hpp"
#include "rrq/quadrature.hpp"
#include "rrq/special.hpp"
#include "rrq/qseries.hpp"
#include "rrq/check.hpp"
#include "rrq/modular.hpp"
#include "rrq/sextic.hpp"
#include "rrq/trig_modular.hpp"
#include "rrq/identities.hpp"
#include "rrq/modular_checks.hpp"
#include "rrq/verify.hpp"
