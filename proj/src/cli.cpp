#include <mcbound/cli.hpp>

#include <mcbound/bounds.hpp>
#include <mcbound/canonical.hpp>
#include <mcbound/circuit.hpp>
#include <mcbound/errors.hpp>
#include <mcbound/generate.hpp>
#include <mcbound/io.hpp>
#include <mcbound/oracle.hpp>
#include <mcbound/random_circuit.hpp>

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <random>
#include <set>

namespace mcbound
{

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

/* gate counts from which generation needs --allow-long */
constexpr unsigned long_run_gates = 6u;

struct run_config
{
  unsigned workers{ 1 };
  uint64_t budget{ default_circuit_budget };
  bool verbose{ false };

  unsigned k{ 0 };
  unsigned n{ 0 };
  unsigned max_k{ 0 };
  bool allow_long{ false };
  bool prune_partial{ false };
  std::string out_path;
  std::string in_path;
  std::string classes;
  std::string topologies_path;
  bool generate_count{ false };
  std::string suite;
  unsigned cases{ 1000 };
  uint64_t seed{ 42 };
};

class command_context
{
public:
  command_context( const run_config& cfg, std::ostream& out, std::ostream& err ) : cfg_( cfg ), out_( out ), err_( err )
  {
  }

  int generate_cmd();
  int table2_cmd();
  int prove_cmd();
  int verify_cmd();
  int eval_cmd();

private:
  bool check_long( unsigned k )
  {
    if ( k >= long_run_gates && !cfg_.allow_long )
    {
      err_ << "error: generating " << k << "-gate topologies is a long run; pass --allow-long to proceed\n";
      return false;
    }
    return true;
  }

  generate_params params()
  {
    generate_params p;
    p.workers = cfg_.workers;
    p.prune_partial = cfg_.prune_partial;
    if ( cfg_.verbose || cfg_.allow_long )
    {
      p.on_progress = [this]( const generate_progress& progress ) {
        err_ << "extended " << progress.parents << " topologies with " << progress.gates << " gates, "
             << progress.candidates << " candidates; classes so far:";
        for ( std::size_t size = 1; size < progress.classes.size(); ++size )
          err_ << " k=" << size << ":" << progress.classes[size];
        err_ << '\n';
      };
    }
    return p;
  }

  int verify_oracle_topologies();
  int verify_rewrites();
  int verify_completeness();
  int verify_m3();

  const run_config& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

int command_context::generate_cmd()
{
  if ( !check_long( cfg_.k ) )
    return exit_usage;
  const auto set = generate( cfg_.k, params() );
  if ( !cfg_.out_path.empty() )
    write_file( cfg_.out_path, to_string( set ) );
  out_ << set.size() << '\n';
  return exit_ok;
}

int command_context::table2_cmd()
{
  if ( cfg_.max_k > published_class_counts.size() )
  {
    err_ << "error: published counts exist for k <= " << published_class_counts.size() << '\n';
    return exit_usage;
  }
  if ( !check_long( cfg_.max_k ) )
    return exit_usage;
  const auto sets = generate_up_to( cfg_.max_k, params() );
  out_ << "k |T_k/=| expected\n";
  std::vector<unsigned> mismatches;
  for ( const auto& set : sets )
  {
    const auto expected = published_class_counts[set.k - 1u];
    out_ << set.k << ' ' << set.size() << ' ' << expected << ( set.size() == expected ? "" : " MISMATCH" ) << '\n';
    if ( set.size() != expected )
      mismatches.push_back( set.k );
  }
  if ( mismatches.empty() )
    return exit_ok;
  err_ << "mismatch at k =";
  for ( auto k : mismatches )
    err_ << ' ' << k;
  err_ << '\n';
  return exit_failed;
}

int command_context::prove_cmd()
{
  big_count classes;
  const int sources = !cfg_.classes.empty() + !cfg_.topologies_path.empty() + cfg_.generate_count;
  if ( sources != 1 )
  {
    err_ << "error: give exactly one of --classes, --topologies or --generate\n";
    return exit_usage;
  }
  if ( !cfg_.classes.empty() )
  {
    if ( cfg_.classes.find_first_not_of( "0123456789" ) != std::string::npos )
    {
      err_ << "error: --classes expects a decimal count\n";
      return exit_usage;
    }
    classes = big_count( cfg_.classes );
  }
  else if ( !cfg_.topologies_path.empty() )
  {
    const auto set = parse_topology_set( read_file( cfg_.topologies_path ) );
    if ( set.k != cfg_.k )
    {
      err_ << "error: " << cfg_.topologies_path << " holds " << set.k << "-gate topologies, --k is " << cfg_.k << '\n';
      return exit_usage;
    }
    classes = set.size();
  }
  else
  {
    if ( !check_long( cfg_.k ) )
      return exit_usage;
    classes = cfg_.k == 0u ? 1u : generate( cfg_.k, params() ).size();
  }
  if ( classes < 1 )
  {
    err_ << "error: the topology class count must be at least 1\n";
    return exit_usage;
  }
  const auto report = pigeonhole_report( cfg_.n, cfg_.k, classes );
  out_ << to_string( report );
  return report.verdict ? exit_ok : exit_failed;
}

int command_context::verify_cmd()
{
  if ( cfg_.suite == "oracle-topologies" )
    return verify_oracle_topologies();
  if ( cfg_.suite == "rewrites" )
    return verify_rewrites();
  if ( cfg_.suite == "completeness" )
    return verify_completeness();
  return verify_m3();
}

int command_context::verify_oracle_topologies()
{
  bool ok = true;
  for ( unsigned k = 1; k <= cfg_.max_k; ++k )
  {
    /* canonical forms against brute-force orbit keys, over every well-layered topology */
    std::map<topology, std::pair<std::vector<uint64_t>, topology>> by_canonical;
    std::map<std::vector<uint64_t>, std::pair<topology, topology>> by_key;
    std::optional<std::pair<topology, topology>> split;
    enumerate_raw_topologies( k, [&]( const topology& t ) {
      if ( split || !oracle_well_layered( t ) )
        return;
      const auto canon = canonical_form( t );
      const auto key = orbit_key( t );
      const auto a = by_canonical.try_emplace( canon, key, t ).first;
      const auto b = by_key.try_emplace( key, canon, t ).first;
      if ( a->second.first != key )
        split = std::make_pair( t, a->second.second );
      else if ( b->second.first != canon )
        split = std::make_pair( t, b->second.second );
    } );
    if ( split )
    {
      err_ << "k=" << k << ": canonical form disagrees with brute-force equivalence on\n"
           << to_string( split->first ) << "and\n"
           << to_string( split->second );
      ok = false;
      continue;
    }

    const auto candidates = well_layered_minimal_topologies( k );
    const auto classes = brute_equiv_classes( candidates );
    std::set<std::vector<uint64_t>> class_keys;
    for ( const auto& c : classes )
      class_keys.insert( orbit_key( candidates[c.front()] ) );

    const auto generated = generate( k, params() );
    std::set<std::vector<uint64_t>> generated_keys;
    std::optional<topology> stray;
    for ( const auto& member : generated.members )
    {
      const auto key = orbit_key( member );
      if ( !class_keys.contains( key ) || !generated_keys.insert( key ).second )
        stray = member;
    }
    const bool level_ok = !stray && generated_keys.size() == class_keys.size();
    out_ << "k=" << k << " oracle=" << classes.size() << " generated=" << generated.size()
         << ( level_ok ? " ok" : " FAIL" ) << '\n';
    if ( stray )
      err_ << "generated topology outside the oracle classes or repeated:\n" << to_string( *stray );
    ok = ok && level_ok;
  }
  return ok ? exit_ok : exit_failed;
}

int command_context::verify_rewrites()
{
  std::mt19937_64 rng( cfg_.seed );
  for ( unsigned i = 0; i < cfg_.cases; ++i )
  {
    const auto c = random_circuit( rng, 4u, 4u );
    const auto tt = compute_truth_table( c );
    std::string failure;

    const auto nn = negation_normalize( c );
    if ( compute_truth_table( nn ) != tt )
      failure = "negation_normalize changed the function";
    else if ( !is_negation_normal( nn ) )
      failure = "negation_normalize left T on both inputs of a gate";
    else if ( negation_normalize( nn ) != nn )
      failure = "negation_normalize is not idempotent";

    if ( failure.empty() )
    {
      const auto wl = well_layer_normalize( c );
      const auto m = minimalize_circuit( wl );
      const auto t = topology_of( m );
      if ( compute_truth_table( wl ) != tt )
        failure = "well_layer_normalize changed the function";
      else if ( compute_truth_table( m ) != tt )
        failure = "minimalize_circuit changed the function";
      else if ( m.num_gates() != c.num_gates() )
        failure = "minimalize_circuit changed the gate count";
      else if ( !is_minimal( t ) || !is_well_layered( t ) )
        failure = "minimalize_circuit result is not minimal and well-layered";
      else if ( minimalize_circuit( m ) != m )
        failure = "minimalize_circuit is not idempotent";
    }

    if ( !failure.empty() )
    {
      err_ << "case " << i << " (seed " << cfg_.seed << "): " << failure << '\n' << to_string( c );
      return exit_failed;
    }
  }
  out_ << "rewrites: " << cfg_.cases << " cases passed (seed " << cfg_.seed << ")\n";
  return exit_ok;
}

int command_context::verify_completeness()
{
  bool ok = true;
  for ( const auto& [n, k] : { std::pair{ 1u, 1u }, std::pair{ 2u, 0u }, std::pair{ 2u, 1u }, std::pair{ 2u, 2u } } )
  {
    const bool level_ok = verify_completeness_small( n, k, cfg_.budget );
    out_ << "n=" << n << " k=" << k << ( level_ok ? " ok" : " FAIL" ) << '\n';
    ok = ok && level_ok;
  }
  return ok ? exit_ok : exit_failed;
}

int command_context::verify_m3()
{
  const auto one = exhaustive_function_set( 3u, 1u, generate( 1u ).members, true, cfg_.budget );
  const auto two = exhaustive_function_set( 3u, 2u, generate( 2u ).members, true, cfg_.budget );
  out_ << "n=3 k=1 functions=" << one.size() << '\n' << "n=3 k=2 functions=" << two.size() << '\n';
  const bool ok = one.size() < one.universe_size() && two.size() == two.universe_size();
  out_ << ( ok ? "M(3) = 2 reproduced\n" : "M(3) = 2 not reproduced\n" );
  return ok ? exit_ok : exit_failed;
}

int command_context::eval_cmd()
{
  const auto c = parse_circuit( read_file( cfg_.in_path ) );
  out_ << to_string( compute_truth_table( c ) ) << '\n';
  return exit_ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  run_config cfg;
  CLI::App app{ "Topology enumeration and counting bounds for XOR-AND circuits", "mcbound" };
  app.require_subcommand( 1 );
  app.option_defaults()->always_capture_default();
  app.add_option( "--workers", cfg.workers, "Worker threads for generation; never changes results" )
      ->envname( "MCBOUND_WORKERS" )
      ->check( CLI::Range( 1u, 1024u ) );
  app.add_option( "--budget", cfg.budget, "Maximum number of circuits an exhaustive search may visit" );
  app.add_flag( "--verbose", cfg.verbose, "Report generation progress on stderr" );

  auto* gen = app.add_subcommand( "generate", "Class representatives of minimal well-layered topologies" );
  gen->add_option( "--k", cfg.k, "Gate count" )->required()->check( CLI::Range( 1u, generate_max_gates ) );
  gen->add_option( "--out", cfg.out_path, "Topology set file to write" );
  gen->add_flag( "--allow-long", cfg.allow_long, "Permit k >= 6" );
  gen->add_flag( "--prune-partial", cfg.prune_partial, "Keep one member per class of partial topologies too" );

  auto* table = app.add_subcommand( "table2", "Class counts for k = 1..max-k against the published values" );
  table->add_option( "--max-k", cfg.max_k, "Largest gate count" )->required()->check( CLI::Range( 1u, 6u ) );
  table->add_flag( "--allow-long", cfg.allow_long, "Permit k = 6" );
  table->add_flag( "--prune-partial", cfg.prune_partial, "Keep one member per class of partial topologies too" );

  auto* prove = app.add_subcommand( "prove", "Pigeonhole bound: is M(n) >= k+1?" );
  prove->add_option( "--n", cfg.n, "Number of inputs" )->required()->check( CLI::Range( 1u, b_n_max_arity ) );
  prove->add_option( "--k", cfg.k, "Number of AND gates" )->required()->check( CLI::Range( 0u, 1000u ) );
  prove->add_option( "--classes", cfg.classes, "Number of topology classes" );
  prove->add_option( "--topologies", cfg.topologies_path, "Topology set file whose size is the class count" )
      ->check( CLI::ExistingFile );
  prove->add_flag( "--generate", cfg.generate_count, "Compute the class count with generate" );
  prove->add_flag( "--allow-long", cfg.allow_long, "Permit --generate with k >= 6" );

  auto* verify = app.add_subcommand( "verify", "Cross-checks against brute-force oracles" );
  verify->add_option( "--suite", cfg.suite, "Suite to run" )
      ->required()
      ->check( CLI::IsMember( { "oracle-topologies", "rewrites", "completeness", "m3" } ) );
  cfg.max_k = 4u;
  verify->add_option( "--max-k", cfg.max_k, "Largest gate count for oracle-topologies" )
      ->check( CLI::Range( 1u, raw_topology_max_gates ) );
  verify->add_option( "--cases", cfg.cases, "Random circuits for rewrites" );
  verify->add_option( "--seed", cfg.seed, "Seed for rewrites" );

  auto* ev = app.add_subcommand( "eval", "Truth table of a circuit file" );
  ev->add_option( "path", cfg.in_path, "Circuit file" )->required()->check( CLI::ExistingFile );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  command_context ctx( cfg, out, err );
  try
  {
    if ( gen->parsed() )
      return ctx.generate_cmd();
    if ( table->parsed() )
      return ctx.table2_cmd();
    if ( prove->parsed() )
      return ctx.prove_cmd();
    if ( verify->parsed() )
      return ctx.verify_cmd();
    return ctx.eval_cmd();
  }
  catch ( const parse_error& e )
  {
    err << "error: " << cfg.in_path << cfg.topologies_path << ": " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace mcbound
