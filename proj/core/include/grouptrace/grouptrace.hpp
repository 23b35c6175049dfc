#pragma once

// Umbrella header: the full public surface.

#include "grouptrace/blocks.hpp"
#include "grouptrace/comodule.hpp"
#include "grouptrace/convolution.hpp"
#include "grouptrace/descriptor.hpp"
#include "grouptrace/diag.hpp"
#include "grouptrace/errors.hpp"
#include "grouptrace/field.hpp"
#include "grouptrace/hopf.hpp"
#include "grouptrace/integral.hpp"
#include "grouptrace/matrix.hpp"
#include "grouptrace/report.hpp"
#include "grouptrace/tensor.hpp"
