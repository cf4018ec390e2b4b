//! Prompt construction, LLM client, caption post-processing.
