#pragma once

#include "qlift/certificate.hpp"
#include "qlift/coextension.hpp"
#include "qlift/dilation.hpp"
#include "qlift/errors.hpp"
#include "qlift/factorization.hpp"
#include "qlift/lift_result.hpp"
#include "qlift/lifting.hpp"
#include "qlift/linalg.hpp"
#include "qlift/qalgebra.hpp"
#include "qlift/verify.hpp"
