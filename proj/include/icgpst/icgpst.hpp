#pragma once

#include "icgpst/fidelity.hpp"
#include "icgpst/icg.hpp"
#include "icgpst/numtheory.hpp"
#include "icgpst/pst.hpp"
#include "icgpst/verify.hpp"
