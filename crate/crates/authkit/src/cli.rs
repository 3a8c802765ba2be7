//! Command-line driver: prove, verify, ideal, root, update, and fuzz over
//! tree files and proof files.
//!
//! Exit codes: 0 on success/acceptance, 1 on proof rejection (and on fuzz
//! runs with unexplained violations), 2 on usage or parse errors.

use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand};

use crate::adversary::{
    self, security_trial, trial_rng, ProverVariant, VariantPair, VerifierVariant,
};
use crate::codec::Bytes;
use crate::hash::HashFamily;
use crate::kit::{
    KitCore, ProofStream, ProverAccum, ProverBase, ProverCache, ProverCacheStateful, ProverKit,
    SharedHashLog, Verdict, VerifierAuth, VerifierBase, VerifierCache, VerifierCacheHet,
    VerifierCacheStateful, VerifierKit,
};
use crate::merkle::{self, parse_path, tree_of_spec, Dir};
use crate::merkle_opt::OptRetrieve;
use crate::proofio;
use crate::treespec::TreeSpec;

#[derive(Parser)]
#[command(name = "authkit", version, about = "Authenticated Merkle trees: prover, verifier, ideal reference, and an adversarial harness")]
pub struct Cli {
    /// Hash family: "strong" or "weak:<bits>"
    #[arg(long, global = true, default_value = "strong")]
    hash: String,

    /// Print a hash-log summary line after the command
    #[arg(long, global = true)]
    log_hashes: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root digest of a tree file (verifier view)
    Root { tree_file: PathBuf },
    /// Run the prover's retrieve and write the proof file
    Prove {
        tree_file: PathBuf,
        /// Retrieval path, e.g. "RL"; empty for the root
        #[arg(long, default_value = "")]
        path: String,
        /// Prover variant: base | accum | cache | cache-state
        #[arg(long, default_value = "base")]
        variant: String,
        /// Use the hand-optimized minimal-proof retrieve
        #[arg(long)]
        opt_retrieve: bool,
        /// Proof file to write
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a proof file against a root digest
    Verify {
        /// Root digest in hex
        #[arg(long)]
        root: String,
        #[arg(long, default_value = "")]
        path: String,
        /// Proof file to read
        #[arg(long)]
        proof: PathBuf,
        /// Verifier variant: base | cache | cache-het | cache-state
        #[arg(long, default_value = "base")]
        variant: String,
        #[arg(long)]
        opt_retrieve: bool,
    },
    /// Run the plain reference retrieve, no proofs involved
    Ideal {
        tree_file: PathBuf,
        #[arg(long, default_value = "")]
        path: String,
    },
    /// Replace the leaf at a path; prints the new root digest
    Update {
        tree_file: PathBuf,
        #[arg(long, default_value = "")]
        path: String,
        /// Replacement leaf payload
        #[arg(long)]
        value: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run seeded adversarial trials and print a summary
    Fuzz {
        #[arg(long)]
        iters: u64,
        #[arg(long)]
        seed: u64,
        /// Truncate the hash family to this many bits for the trials
        #[arg(long)]
        weak_bits: Option<u32>,
        /// Variant pair: base | accum | cache | cache-het | cache-state
        #[arg(long, default_value = "base")]
        variant: String,
        /// Print one line per trial before the summary
        #[arg(long)]
        report: bool,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let family = match parse_family(&cli.hash) {
        Some(f) => f,
        None => return usage_error("--hash must be \"strong\" or \"weak:<bits>\" with bits in 1..=256"),
    };
    let log: Option<SharedHashLog> = cli.log_hashes.then(SharedHashLog::default);
    let core = match &log {
        Some(log) => KitCore::with_log(family.clone(), log.clone()),
        None => KitCore::new(family.clone()),
    };

    let code = match cli.command {
        Command::Root { tree_file } => cmd_root(core, &tree_file),
        Command::Prove {
            tree_file,
            path,
            variant,
            opt_retrieve,
            out,
        } => cmd_prove(core, &tree_file, &path, &variant, opt_retrieve, &out),
        Command::Verify {
            root,
            path,
            proof,
            variant,
            opt_retrieve,
        } => cmd_verify(core, &family, &root, &path, &proof, &variant, opt_retrieve),
        Command::Ideal { tree_file, path } => cmd_ideal(&tree_file, &path),
        Command::Update {
            tree_file,
            path,
            value,
            out,
        } => cmd_update(core, &tree_file, &path, value.into_bytes(), &out),
        Command::Fuzz {
            iters,
            seed,
            weak_bits,
            variant,
            report,
        } => cmd_fuzz(&family, iters, seed, weak_bits, &variant, report),
    };

    if code != 2 {
        if let Some(log) = &log {
            let log = log.borrow();
            println!(
                "hashlog entries={} collision_free={}",
                log.len(),
                family.collision_free(&log)
            );
        }
    }
    code
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn parse_family(spec: &str) -> Option<HashFamily> {
    if spec == "strong" {
        return Some(HashFamily::strong());
    }
    let bits = spec.strip_prefix("weak:")?.parse::<u32>().ok()?;
    (1..=256).contains(&bits).then(|| HashFamily::weak(bits))
}

fn read_tree(path: &FsPath) -> Result<TreeSpec, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    TreeSpec::parse(&bytes).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_path(s: &str) -> Result<Vec<Dir>, String> {
    parse_path(s).ok_or_else(|| format!("path must match [LR]*, got {s:?}"))
}

fn print_result(prefix: &str, r: &Option<Bytes>) {
    let mut out = std::io::stdout().lock();
    match r {
        Some(s) => {
            let _ = out.write_all(prefix.as_bytes());
            let _ = out.write_all(b"some ");
            let _ = out.write_all(s);
            let _ = out.write_all(b"\n");
        }
        None => {
            let _ = out.write_all(prefix.as_bytes());
            let _ = out.write_all(b"none\n");
        }
    }
}

fn cmd_root(core: KitCore, tree_file: &FsPath) -> i32 {
    let spec = match read_tree(tree_file) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let kit = VerifierBase::new(core);
    let root = tree_of_spec(&kit, &spec);
    println!("{}", root.0);
    0
}

fn prove_dispatch(
    variant: &str,
    core: KitCore,
    spec: &TreeSpec,
    path: &[Dir],
    opt: bool,
) -> Option<(ProofStream, Option<Bytes>)> {
    fn go<K: ProverKit + OptRetrieve>(
        kit: &K,
        spec: &TreeSpec,
        path: &[Dir],
        opt: bool,
    ) -> (ProofStream, Option<Bytes>) {
        let t = tree_of_spec(kit, spec);
        let comp = if opt {
            kit.retrieve_opt(path, &t)
        } else {
            merkle::retrieve(kit, path, t)
        };
        kit.run(comp)
    }
    Some(match variant {
        "base" => go(&ProverBase::new(core), spec, path, opt),
        "accum" => go(&ProverAccum::new(core), spec, path, opt),
        "cache" => go(&ProverCache::new(core), spec, path, opt),
        "cache-state" => go(&ProverCacheStateful::new(core), spec, path, opt),
        _ => return None,
    })
}

fn cmd_prove(
    core: KitCore,
    tree_file: &FsPath,
    path: &str,
    variant: &str,
    opt: bool,
    out: &FsPath,
) -> i32 {
    let spec = match read_tree(tree_file) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let path = match read_path(path) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let (stream, result) = match prove_dispatch(variant, core, &spec, &path, opt) {
        Some(r) => r,
        None => return usage_error(&format!("unknown prover variant {variant:?}")),
    };
    if let Err(e) = std::fs::write(out, proofio::write_proof(&stream)) {
        return usage_error(&format!("cannot write {}: {e}", out.display()));
    }
    print_result("", &result);
    0
}

fn verify_dispatch(
    variant: &str,
    core: KitCore,
    root: VerifierAuth,
    path: &[Dir],
    proof: ProofStream,
    opt: bool,
) -> Option<Verdict<Option<Bytes>>> {
    fn go<K: VerifierKit + OptRetrieve>(
        kit: &K,
        root: VerifierAuth,
        path: &[Dir],
        proof: ProofStream,
        opt: bool,
    ) -> Verdict<Option<Bytes>> {
        let comp = if opt {
            kit.retrieve_opt(path, &root)
        } else {
            merkle::retrieve(kit, path, root)
        };
        kit.run(comp, proof)
    }
    Some(match variant {
        "base" => go(&VerifierBase::new(core), root, path, proof, opt),
        "cache" => go(&VerifierCache::new(core), root, path, proof, opt),
        "cache-het" => go(&VerifierCacheHet::new(core), root, path, proof, opt),
        "cache-state" => go(&VerifierCacheStateful::new(core), root, path, proof, opt),
        _ => return None,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    core: KitCore,
    family: &HashFamily,
    root: &str,
    path: &str,
    proof_file: &FsPath,
    variant: &str,
    opt: bool,
) -> i32 {
    let root = match crate::hash::Digest::from_hex(root, family) {
        Ok(d) => VerifierAuth(d),
        Err(e) => return usage_error(&format!("bad --root: {e}")),
    };
    let path = match read_path(path) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let bytes = match std::fs::read(proof_file) {
        Ok(b) => b,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", proof_file.display())),
    };
    let proof = match proofio::read_proof(&bytes) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("{}: {e}", proof_file.display())),
    };
    let verdict = match verify_dispatch(variant, core, root, &path, proof, opt) {
        Some(v) => v,
        None => return usage_error(&format!("unknown verifier variant {variant:?}")),
    };
    match verdict.result {
        Some(result) => {
            print_result("ok ", &result);
            if verdict.leftover > 0 {
                println!("warning: {} leftover proof item(s)", verdict.leftover);
            }
            0
        }
        None => {
            println!("proof failure");
            1
        }
    }
}

fn cmd_ideal(tree_file: &FsPath, path: &str) -> i32 {
    let spec = match read_tree(tree_file) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let path = match read_path(path) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let kit = crate::kit::Ideal::new();
    let t = tree_of_spec(&kit, &spec);
    let result = crate::kit::IdealKit::run(&kit, merkle::retrieve(&kit, &path, t));
    print_result("", &result);
    0
}

fn cmd_update(core: KitCore, tree_file: &FsPath, path: &str, value: Bytes, out: &FsPath) -> i32 {
    let spec = match read_tree(tree_file) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let path = match read_path(path) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let kit = ProverBase::new(core);
    let t = tree_of_spec(&kit, &spec);
    let (stream, new_root) = kit.run(merkle::update(&kit, &path, value, t));
    if let Err(e) = std::fs::write(out, proofio::write_proof(&stream)) {
        return usage_error(&format!("cannot write {}: {e}", out.display()));
    }
    match new_root {
        Some(root) => println!("{}", root.digest),
        None => println!("none"),
    }
    0
}

fn pair_for(variant: &str) -> Option<VariantPair> {
    let pair = match variant {
        "base" => VariantPair {
            prover: ProverVariant::Base,
            verifier: VerifierVariant::Base,
        },
        "accum" => VariantPair {
            prover: ProverVariant::Accum,
            verifier: VerifierVariant::Base,
        },
        "cache" => VariantPair {
            prover: ProverVariant::Cache,
            verifier: VerifierVariant::Cache,
        },
        "cache-het" => VariantPair {
            prover: ProverVariant::Cache,
            verifier: VerifierVariant::CacheHet,
        },
        "cache-state" => VariantPair {
            prover: ProverVariant::CacheStateful,
            verifier: VerifierVariant::CacheStateful,
        },
        _ => return None,
    };
    Some(pair)
}

fn cmd_fuzz(
    family: &HashFamily,
    iters: u64,
    seed: u64,
    weak_bits: Option<u32>,
    variant: &str,
    report: bool,
) -> i32 {
    if iters == 0 {
        return usage_error("--iters must be at least 1");
    }
    let family = match weak_bits {
        Some(bits) if (1..=256).contains(&bits) => HashFamily::weak(bits),
        Some(_) => return usage_error("--weak-bits must be in 1..=256"),
        None => family.clone(),
    };
    let pair = match pair_for(variant) {
        Some(p) => p,
        None => return usage_error(&format!("unknown variant pair {variant:?}")),
    };

    let (mut accepted, mut rejected, mut violations, mut collisions) = (0u64, 0u64, 0u64, 0u64);
    let mut unexplained = 0u64;
    for i in 0..iters {
        let mut rng = trial_rng(seed, i);
        let prog = adversary::gen_program(&mut rng, true);
        let n_mut = 1 + (i % 2) as usize;
        let r = security_trial(i, &prog, pair, &family, &mut rng, n_mut);
        if report {
            println!("{}", r.line());
        }
        if r.accepted {
            accepted += 1;
        } else {
            rejected += 1;
        }
        if r.violation {
            violations += 1;
            if !r.collision_detected {
                unexplained += 1;
            }
        }
        if r.collision_detected {
            collisions += 1;
        }
    }
    println!("accepted={accepted} rejected={rejected} violations={violations} collisions={collisions}");
    if unexplained == 0 {
        0
    } else {
        1
    }
}
