#ifndef ALGZ_EXECUTION_HPP
#define ALGZ_EXECUTION_HPP

namespace algz
{

// Selects the serial reference kernel or its OpenMP counterpart. Both
// produce identical results; ordering of any reported lists is fixed.
enum class Execution { serial, parallel };

} // namespace algz

#endif
